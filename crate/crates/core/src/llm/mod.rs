//! Vision-language model access: prompts, endpoint configuration, an
//! append-only response cache, and deterministic mock models.

mod cache;
mod client;
mod http;
mod mock;
mod prompt;

pub use cache::{CacheKey, ResponseCache};
pub use client::{LlmClient, QueryRequest, RateLimiter, RetryPolicy};
pub use mock::mock_reply;
pub use prompt::{build_prompt, sha256_hex, PromptTemplate};

use std::path::Path;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ApiStyle {
    /// `POST {base_url}/chat/completions` with an image_url content part.
    OpenAiChatCompatible,
    /// `POST {base_url}/models/{model}:generateContent` with inline_data.
    GeminiGenerate,
    LocalMock,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MockBehavior {
    /// Answers with the sample's label in the prompt's format.
    Oracle,
    /// Always "[]".
    Empty,
    /// Counts up from 0 until the token budget runs out, never closing the list.
    Runaway,
    /// A random answer seeded by (seed, sample id).
    Random(u64),
    /// The label shifted by k indices (variate IDs wrap around).
    OffByK(usize),
}

impl MockBehavior {
    /// Parses `oracle`, `empty`, `runaway`, `random:<seed>`, `off-by-k:<k>`.
    pub fn parse(s: &str) -> Result<Self> {
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let num = |a: Option<&str>| -> Result<u64> {
            a.ok_or_else(|| Error::Config(format!("mock {head} needs an argument")))?
                .parse()
                .map_err(|_| Error::Config(format!("bad mock argument in {s:?}")))
        };
        Ok(match head {
            "oracle" => MockBehavior::Oracle,
            "empty" => MockBehavior::Empty,
            "runaway" => MockBehavior::Runaway,
            "random" => MockBehavior::Random(num(arg)?),
            "off-by-k" | "offbyk" => MockBehavior::OffByK(num(arg)? as usize),
            _ => return Err(Error::Config(format!("unknown mock behavior {s:?}"))),
        })
    }

    pub fn slug(&self) -> String {
        match self {
            MockBehavior::Oracle => "oracle".into(),
            MockBehavior::Empty => "empty".into(),
            MockBehavior::Runaway => "runaway".into(),
            MockBehavior::Random(s) => format!("random-{s}"),
            MockBehavior::OffByK(k) => format!("off-by-{k}"),
        }
    }
}

fn default_max_tokens() -> u32 {
    1024
}

fn default_timeout() -> u64 {
    120
}

/// One model endpoint. `auth_env` names the environment variable holding
/// the API key; the key itself is read at request time and never stored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelEndpoint {
    /// Name used in caches and reports.
    pub name: String,
    /// Model identifier sent to the API; defaults to `name`.
    #[serde(default)]
    pub model: Option<String>,
    pub api_style: ApiStyle,
    #[serde(default)]
    pub base_url: String,
    #[serde(default)]
    pub auth_env: Option<String>,
    #[serde(default = "default_max_tokens")]
    pub max_tokens: u32,
    #[serde(default)]
    pub temperature: f64,
    #[serde(default = "default_timeout")]
    pub timeout_secs: u64,
    /// Requests per minute; `None` means unlimited.
    #[serde(default)]
    pub rate_limit_rpm: Option<f64>,
    #[serde(default)]
    pub mock: Option<MockBehavior>,
}

impl ModelEndpoint {
    pub fn model_id(&self) -> &str {
        self.model.as_deref().unwrap_or(&self.name)
    }

    pub fn timeout(&self) -> Duration {
        Duration::from_secs(self.timeout_secs)
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let ep: Self = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        ep.validate()?;
        Ok(ep)
    }

    /// Reads an endpoint from a TOML file, or builds a mock from a
    /// `mock:<behavior>` spec.
    pub fn resolve(spec: &str) -> Result<Self> {
        if let Some(b) = spec.strip_prefix("mock:") {
            return Ok(mock_model(MockBehavior::parse(b)?));
        }
        let path = Path::new(spec);
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml(&text)
    }

    pub fn validate(&self) -> Result<()> {
        if self.name.is_empty() {
            return Err(Error::Config("endpoint name is empty".into()));
        }
        match self.api_style {
            ApiStyle::LocalMock if self.mock.is_none() => {
                Err(Error::Config("local mock endpoint needs a mock behavior".into()))
            }
            ApiStyle::OpenAiChatCompatible | ApiStyle::GeminiGenerate
                if self.base_url.is_empty() =>
            {
                Err(Error::Config(format!("endpoint {} has no base_url", self.name)))
            }
            _ => match self.rate_limit_rpm {
                Some(r) if !(r > 0.0) => Err(Error::Config("rate limit must be positive".into())),
                _ => Ok(()),
            },
        }
    }
}

/// A local endpoint with the named behavior.
pub fn mock_model(behavior: MockBehavior) -> ModelEndpoint {
    ModelEndpoint {
        name: format!("mock-{}", behavior.slug()),
        model: None,
        api_style: ApiStyle::LocalMock,
        base_url: String::new(),
        auth_env: None,
        max_tokens: default_max_tokens(),
        temperature: 0.0,
        timeout_secs: default_timeout(),
        rate_limit_rpm: None,
        mock: Some(behavior),
    }
}

/// One model answer, as stored in `responses.jsonl`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResponseRecord {
    pub sample_id: String,
    pub endpoint: String,
    pub prompt_sha256: String,
    pub image_sha256: String,
    pub raw_text: String,
    pub latency_ms: u64,
    #[serde(default)]
    pub prompt_tokens: Option<u64>,
    #[serde(default)]
    pub completion_tokens: Option<u64>,
    pub retrieved_from_cache: bool,
    /// Unix time in milliseconds.
    pub timestamp_ms: u64,
    /// Set when the endpoint rejected the request permanently.
    #[serde(default)]
    pub error: Option<String>,
}

impl ResponseRecord {
    pub fn key(&self) -> CacheKey {
        CacheKey {
            sample_id: self.sample_id.clone(),
            endpoint: self.endpoint.clone(),
            prompt_sha256: self.prompt_sha256.clone(),
            image_sha256: self.image_sha256.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mock_specs() {
        assert_eq!(MockBehavior::parse("random:7").unwrap(), MockBehavior::Random(7));
        assert_eq!(MockBehavior::parse("off-by-k:3").unwrap(), MockBehavior::OffByK(3));
        assert!(MockBehavior::parse("random").is_err());
        assert!(MockBehavior::parse("psychic").is_err());
        assert_eq!(ModelEndpoint::resolve("mock:oracle").unwrap().name, "mock-oracle");
    }

    #[test]
    fn endpoint_toml_defaults() {
        let ep = ModelEndpoint::from_toml(
            r#"
            name = "gpt-4o"
            api_style = "open_ai_chat_compatible"
            base_url = "https://api.example.com/v1"
            auth_env = "EXAMPLE_API_KEY"
            rate_limit_rpm = 30
            "#,
        )
        .unwrap();
        assert_eq!(ep.max_tokens, 1024);
        assert_eq!(ep.temperature, 0.0);
        let text = serde_json::to_string(&ep).unwrap();
        assert!(text.contains("EXAMPLE_API_KEY"));
        assert!(ModelEndpoint::from_toml("name = \"x\"\napi_style = \"gemini_generate\"").is_err());
    }
}
