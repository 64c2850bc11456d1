// Request bodies and reply extraction for the two hosted API styles.

use std::time::Duration;

use base64::Engine;
use serde_json::{json, Value};

use super::{ApiStyle, ModelEndpoint};

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct HttpReply {
    pub text: String,
    pub prompt_tokens: Option<u64>,
    pub completion_tokens: Option<u64>,
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Failure {
    Transient {
        message: String,
        retry_after: Option<Duration>,
    },
    Permanent {
        status: u16,
        message: String,
    },
}

/// URL and JSON body for one image+text request.
pub(crate) fn request(ep: &ModelEndpoint, prompt: &str, png: &[u8]) -> (String, Value) {
    let b64 = base64::engine::general_purpose::STANDARD.encode(png);
    let base = ep.base_url.trim_end_matches('/');
    match ep.api_style {
        ApiStyle::GeminiGenerate => (
            format!("{base}/models/{}:generateContent", ep.model_id()),
            json!({
                "contents": [{
                    "role": "user",
                    "parts": [
                        {"text": prompt},
                        {"inline_data": {"mime_type": "image/png", "data": b64}}
                    ]
                }],
                "generationConfig": {
                    "temperature": ep.temperature,
                    "maxOutputTokens": ep.max_tokens
                }
            }),
        ),
        _ => (
            format!("{base}/chat/completions"),
            json!({
                "model": ep.model_id(),
                "messages": [{
                    "role": "user",
                    "content": [
                        {"type": "text", "text": prompt},
                        {"type": "image_url", "image_url": {"url": format!("data:image/png;base64,{b64}")}}
                    ]
                }],
                "max_tokens": ep.max_tokens,
                "temperature": ep.temperature
            }),
        ),
    }
}

/// Pulls the answer text and token counts out of a reply body.
pub(crate) fn extract(style: ApiStyle, body: &Value) -> Option<HttpReply> {
    match style {
        ApiStyle::GeminiGenerate => {
            let parts = body.pointer("/candidates/0/content/parts")?.as_array()?;
            let text: String = parts
                .iter()
                .filter_map(|p| p.get("text").and_then(Value::as_str))
                .collect();
            Some(HttpReply {
                text,
                prompt_tokens: body.pointer("/usageMetadata/promptTokenCount").and_then(Value::as_u64),
                completion_tokens: body
                    .pointer("/usageMetadata/candidatesTokenCount")
                    .and_then(Value::as_u64),
            })
        }
        _ => {
            let content = body.pointer("/choices/0/message/content")?;
            // Some servers return content as an array of parts.
            let text = match content {
                Value::String(s) => s.clone(),
                Value::Array(parts) => parts
                    .iter()
                    .filter_map(|p| p.get("text").and_then(Value::as_str))
                    .collect(),
                Value::Null => String::new(),
                _ => return None,
            };
            Some(HttpReply {
                text,
                prompt_tokens: body.pointer("/usage/prompt_tokens").and_then(Value::as_u64),
                completion_tokens: body.pointer("/usage/completion_tokens").and_then(Value::as_u64),
            })
        }
    }
}

fn transient(status: u16) -> bool {
    status == 408 || status == 429 || status >= 500
}

/// Sends one request. The API key goes only into a header.
pub(crate) fn send(
    client: &reqwest::blocking::Client,
    ep: &ModelEndpoint,
    key: Option<&str>,
    prompt: &str,
    png: &[u8],
) -> Result<HttpReply, Failure> {
    let (url, body) = request(ep, prompt, png);
    let mut req = client.post(&url).json(&body).timeout(ep.timeout());
    if let Some(key) = key {
        req = match ep.api_style {
            ApiStyle::GeminiGenerate => req.header("x-goog-api-key", key),
            _ => req.bearer_auth(key),
        };
    }
    let resp = req.send().map_err(|e| Failure::Transient {
        message: e.to_string(),
        retry_after: None,
    })?;
    let status = resp.status().as_u16();
    let retry_after = resp
        .headers()
        .get("retry-after")
        .and_then(|v| v.to_str().ok())
        .and_then(|v| v.trim().parse::<u64>().ok())
        .map(Duration::from_secs);
    let text = resp.text().map_err(|e| Failure::Transient {
        message: e.to_string(),
        retry_after: None,
    })?;
    if !(200..300).contains(&status) {
        let message: String = text.chars().take(300).collect();
        return Err(if transient(status) {
            Failure::Transient {
                message: format!("http {status}: {message}"),
                retry_after,
            }
        } else {
            Failure::Permanent { status, message }
        });
    }
    let body: Value = serde_json::from_str(&text).map_err(|e| Failure::Permanent {
        status,
        message: format!("reply is not JSON: {e}"),
    })?;
    extract(ep.api_style, &body).ok_or_else(|| Failure::Permanent {
        status,
        message: "reply has no answer text".into(),
    })
}
