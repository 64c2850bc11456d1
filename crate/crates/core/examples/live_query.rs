//! Sends one rendered image to a hosted endpoint described by a TOML file
//! and prints the parsed answer. The API key is read from the environment
//! variable named by the file's `auth_env`.
//!
//!     OPENAI_API_KEY=... cargo run --example live_query -- endpoints/openai-compatible.example.toml

use tsi_bench::harness::{assemble, synthesize, ArchiveStore};
use tsi_bench::llm::{build_prompt, LlmClient, ModelEndpoint, QueryRequest, ResponseCache};
use tsi_bench::parse::{parse_reply, ParseLimits};
use tsi_bench::plan::{plan_datasets, ExperimentMatrix};
use tsi_bench::render::RenderStyle;

fn main() -> tsi_bench::Result<()> {
    let Some(spec) = std::env::args().nth(1) else {
        eprintln!("usage: live_query <endpoint.toml | mock:oracle>");
        std::process::exit(2);
    };
    let endpoint = ModelEndpoint::resolve(&spec)?;
    let matrix = ExperimentMatrix::from_toml(
        r#"
        scenarios = ["univariate/sine"]
        anomaly_types = ["global"]
        samples_per_dataset = 1
        "#,
    )?;
    let plan = plan_datasets(&matrix)?;
    let s = synthesize(&plan.datasets[0], plan.seed, 0, None, &ArchiveStore::default())?;
    let (sample, png) = assemble(s, &RenderStyle::default())?;

    let tmp = tempfile::tempdir().expect("temp dir");
    let cache = ResponseCache::open(&tmp.path().join("responses.jsonl"))?;
    let client = LlmClient::new(endpoint, cache)?;
    let prompt = build_prompt(sample.label.granularity());
    let rec = client.query(&QueryRequest {
        sample: &sample,
        image: &png,
        prompt: prompt.text,
    })?;
    let pred = parse_reply(&rec.raw_text, prompt.granularity, sample.series.length(), &ParseLimits::default());
    println!("truth:  {:?}", sample.label.payload());
    println!("reply:  {}", rec.raw_text.trim());
    println!("parsed: {:?} {:?} ({} ms)", pred.parse_status, pred.payload, rec.latency_ms);
    Ok(())
}
