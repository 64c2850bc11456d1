mod common;

use std::path::{Path, PathBuf};
use std::time::Duration;

use common::server::{Reply, Server};
use serde_json::json;
use tempfile::TempDir;
use tsi_bench::domain::Sample;
use tsi_bench::harness::{cmd_build, cmd_run, image_file, read_predictions};
use tsi_bench::llm::{ApiStyle, LlmClient, ModelEndpoint, QueryRequest, ResponseCache, RetryPolicy};
use tsi_bench::manifest::manifest_read;
use tsi_bench::plan::ExperimentMatrix;
use tsi_bench::render::RenderStyle;
use tsi_bench::Error;

const KEY: &str = "sk-test-4f1d9c0e7b";

fn smoke(dir: &Path) -> PathBuf {
    let matrix = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../matrices/smoke.toml");
    let m = ExperimentMatrix::load(&matrix).unwrap();
    cmd_build(&m, &dir.join("bench"), &RenderStyle::default()).unwrap().manifest
}

fn first_sample(manifest: &Path) -> (Sample, Vec<u8>) {
    let s = manifest_read(manifest).unwrap().samples.remove(0);
    let png = std::fs::read(image_file(manifest, &s)).unwrap();
    (s, png)
}

/// Each test names its own key variable so parallel tests never race on it.
fn endpoint(server: &Server, style: ApiStyle, key_var: &str) -> ModelEndpoint {
    std::env::set_var(key_var, KEY);
    ModelEndpoint::from_toml(&format!(
        "name = \"local\"\nmodel = \"m-1\"\napi_style = \"{}\"\nbase_url = \"{}\"\nauth_env = \"{key_var}\"\ntimeout_secs = 10\n",
        match style {
            ApiStyle::GeminiGenerate => "gemini_generate",
            _ => "open_ai_chat_compatible",
        },
        server.base_url
    ))
    .unwrap()
}

fn fast_retry(max_retries: u32) -> RetryPolicy {
    RetryPolicy {
        max_retries,
        base_delay: Duration::from_millis(5),
        max_delay: Duration::from_millis(20),
    }
}

fn query(client: &LlmClient, sample: &Sample, png: &[u8]) -> tsi_bench::Result<tsi_bench::llm::ResponseRecord> {
    client.query(&QueryRequest {
        sample,
        image: png,
        prompt: "find the anomalies",
    })
}

#[test]
fn openai_request_carries_key_image_and_prompt() {
    let tmp = TempDir::new().unwrap();
    let (sample, png) = first_sample(&smoke(tmp.path()));
    let server = Server::start(|_, _| Reply::chat("[12, 40]"));
    let ep = endpoint(&server, ApiStyle::OpenAiChatCompatible, "TSI_TEST_KEY_OPENAI");
    let cache = ResponseCache::open(&tmp.path().join("r.jsonl")).unwrap();
    let client = LlmClient::new(ep, cache).unwrap();
    let rec = query(&client, &sample, &png).unwrap();
    assert_eq!(rec.raw_text, "[12, 40]");
    assert_eq!((rec.prompt_tokens, rec.completion_tokens), (Some(11), Some(4)));
    assert!(!rec.retrieved_from_cache);

    let seen = server.requests();
    assert_eq!(seen.len(), 1);
    assert_eq!(seen[0].path, "/v1/chat/completions");
    assert_eq!(seen[0].header("authorization"), Some(format!("Bearer {KEY}").as_str()));
    let body: serde_json::Value = serde_json::from_str(&seen[0].body).unwrap();
    assert_eq!(body["model"], "m-1");
    assert_eq!(body["messages"][0]["content"][0]["text"], "find the anomalies");
    let url = body["messages"][0]["content"][1]["image_url"]["url"].as_str().unwrap();
    assert!(url.starts_with("data:image/png;base64,iVBOR"));
}

#[test]
fn gemini_request_uses_key_header() {
    let tmp = TempDir::new().unwrap();
    let (sample, png) = first_sample(&smoke(tmp.path()));
    let server = Server::start(|_, _| {
        Reply::json(200, json!({"candidates": [{"content": {"parts": [{"text": "[]"}]}}]}))
    });
    let ep = endpoint(&server, ApiStyle::GeminiGenerate, "TSI_TEST_KEY_GEMINI");
    let client = LlmClient::new(ep, ResponseCache::open(&tmp.path().join("r.jsonl")).unwrap()).unwrap();
    assert_eq!(query(&client, &sample, &png).unwrap().raw_text, "[]");
    let seen = server.requests();
    assert_eq!(seen[0].path, "/v1/models/m-1:generateContent");
    assert_eq!(seen[0].header("x-goog-api-key"), Some(KEY));
    assert_eq!(seen[0].header("authorization"), None);
}

#[test]
fn transient_statuses_are_retried() {
    let tmp = TempDir::new().unwrap();
    let (sample, png) = first_sample(&smoke(tmp.path()));
    let server = Server::start(|n, _| match n {
        0 => Reply::status(429).with_header("retry-after", "0"),
        1 => Reply::status(503),
        _ => Reply::chat("[3]"),
    });
    let ep = endpoint(&server, ApiStyle::OpenAiChatCompatible, "TSI_TEST_KEY_RETRY");
    let client = LlmClient::new(ep, ResponseCache::open(&tmp.path().join("r.jsonl")).unwrap())
        .unwrap()
        .with_retry(fast_retry(3));
    assert_eq!(query(&client, &sample, &png).unwrap().raw_text, "[3]");
    assert_eq!(server.hits(), 3);
    assert_eq!(client.requests_sent(), 3);
    assert_eq!(client.cache().len(), 1);
}

#[test]
fn retries_give_up_after_the_budget() {
    let tmp = TempDir::new().unwrap();
    let (sample, png) = first_sample(&smoke(tmp.path()));
    let server = Server::start(|_, _| Reply::status(500));
    let ep = endpoint(&server, ApiStyle::OpenAiChatCompatible, "TSI_TEST_KEY_EXHAUST");
    let client = LlmClient::new(ep, ResponseCache::open(&tmp.path().join("r.jsonl")).unwrap())
        .unwrap()
        .with_retry(fast_retry(2));
    match query(&client, &sample, &png) {
        Err(Error::TransientExhausted { attempts, .. }) => assert_eq!(attempts, 3),
        other => panic!("expected exhausted retries, got {other:?}"),
    }
    assert_eq!(server.hits(), 3);
    assert!(client.cache().is_empty());
}

#[test]
fn client_errors_are_permanent_and_recorded() {
    let tmp = TempDir::new().unwrap();
    let (sample, png) = first_sample(&smoke(tmp.path()));
    let server = Server::start(|_, _| Reply::status(400));
    let ep = endpoint(&server, ApiStyle::OpenAiChatCompatible, "TSI_TEST_KEY_PERM");
    let path = tmp.path().join("r.jsonl");
    let client = LlmClient::new(ep, ResponseCache::open(&path).unwrap())
        .unwrap()
        .with_retry(fast_retry(3));
    match query(&client, &sample, &png) {
        Err(Error::PermanentEndpoint { status, .. }) => assert_eq!(status, 400),
        other => panic!("expected a permanent error, got {other:?}"),
    }
    assert_eq!(server.hits(), 1);
    // The failure is on file but not served from the cache.
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.contains("\"error\":\"http 400"));
    assert!(client.cache().is_empty());
    assert!(query(&client, &sample, &png).is_err());
    assert_eq!(server.hits(), 2);
}

#[test]
fn missing_key_fails_before_any_request() {
    let tmp = TempDir::new().unwrap();
    let (sample, png) = first_sample(&smoke(tmp.path()));
    let server = Server::start(|_, _| Reply::chat("[]"));
    let mut ep = endpoint(&server, ApiStyle::OpenAiChatCompatible, "TSI_TEST_KEY_UNUSED");
    ep.auth_env = Some("TSI_TEST_KEY_NEVER_SET".into());
    let client = LlmClient::new(ep, ResponseCache::open(&tmp.path().join("r.jsonl")).unwrap()).unwrap();
    assert!(matches!(query(&client, &sample, &png), Err(Error::MissingAuth(v)) if v == "TSI_TEST_KEY_NEVER_SET"));
    assert_eq!(server.hits(), 0);
}

#[test]
fn run_respects_concurrency_and_reruns_from_cache() {
    let tmp = TempDir::new().unwrap();
    let manifest = smoke(tmp.path());
    let server = Server::start(|n, _| Reply::chat(&format!("[{}]", n % 7)).after(Duration::from_millis(150)));
    let ep = endpoint(&server, ApiStyle::OpenAiChatCompatible, "TSI_TEST_KEY_RUN");
    let run_dir = tmp.path().join("runs/local-1");

    let first = cmd_run(&manifest, ep.clone(), &run_dir, 3).unwrap();
    assert_eq!((first.total, first.fresh, first.cached, first.failed()), (10, 10, 0, 0));
    assert_eq!(server.hits(), 10);
    let peak = server.max_active();
    assert!((2..=3).contains(&peak), "peak concurrency {peak}");
    let predictions = std::fs::read(run_dir.join("predictions.jsonl")).unwrap();

    let second = cmd_run(&manifest, ep, &run_dir, 3).unwrap();
    assert_eq!((second.fresh, second.cached), (0, 10));
    assert_eq!(server.hits(), 10, "a cached re-run must not touch the network");
    assert_eq!(std::fs::read(run_dir.join("predictions.jsonl")).unwrap(), predictions);
    assert_eq!(read_predictions(&run_dir).unwrap().len(), 10);

    for file in ["config.json", "responses.jsonl", "predictions.jsonl"] {
        let text = std::fs::read_to_string(run_dir.join(file)).unwrap();
        assert!(!text.contains(KEY), "{file} leaks the key");
    }
    let config = std::fs::read_to_string(run_dir.join("config.json")).unwrap();
    assert!(config.contains("TSI_TEST_KEY_RUN"));
}

#[test]
fn run_spaces_requests_by_the_rate_limit() {
    let tmp = TempDir::new().unwrap();
    let manifest = smoke(tmp.path());
    let server = Server::start(|_, _| Reply::chat("[]"));
    let mut ep = endpoint(&server, ApiStyle::OpenAiChatCompatible, "TSI_TEST_KEY_RATE");
    ep.rate_limit_rpm = Some(400.0); // 150 ms apart
    let interval = 0.150;
    cmd_run(&manifest, ep, &tmp.path().join("runs/rate"), 4).unwrap();

    let seen = server.requests();
    assert_eq!(seen.len(), 10);
    let gaps: Vec<f64> = seen.windows(2).map(|w| (w[1].at - w[0].at).as_secs_f64()).collect();
    let min = gaps.iter().cloned().fold(f64::INFINITY, f64::min);
    let mean = gaps.iter().sum::<f64>() / gaps.len() as f64;
    assert!(min >= interval * 0.9, "gaps {gaps:?}");
    assert!((mean - interval).abs() <= interval * 0.1, "mean gap {mean}, gaps {gaps:?}");
}

#[test]
fn permanent_errors_leave_samples_unanswered() {
    let tmp = TempDir::new().unwrap();
    let manifest = smoke(tmp.path());
    // Every third request is refused.
    let server = Server::start(|n, _| if n % 3 == 0 { Reply::status(403) } else { Reply::chat("[]") });
    let ep = endpoint(&server, ApiStyle::OpenAiChatCompatible, "TSI_TEST_KEY_PARTIAL");
    let run_dir = tmp.path().join("runs/partial");
    let s = cmd_run(&manifest, ep.clone(), &run_dir, 1).unwrap();
    assert_eq!((s.fresh, s.permanent_errors), (6, 4));
    assert_eq!(s.failures.len(), 4);
    assert_eq!(read_predictions(&run_dir).unwrap().len(), 6);

    // Only the refused samples are asked again.
    let s = cmd_run(&manifest, ep, &run_dir, 1).unwrap();
    assert_eq!(s.cached, 6);
    assert_eq!(s.fresh + s.permanent_errors, 4);
    assert_eq!(server.hits(), 14);
}
