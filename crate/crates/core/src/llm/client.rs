use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::thread;
use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use super::http::{self, Failure};
use super::{mock_reply, sha256_hex, ApiStyle, CacheKey, ModelEndpoint, ResponseCache, ResponseRecord};
use crate::domain::Sample;
use crate::error::{Error, Result};

/// Exponential backoff for transient failures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RetryPolicy {
    pub max_retries: u32,
    pub base_delay: Duration,
    pub max_delay: Duration,
}

impl Default for RetryPolicy {
    fn default() -> Self {
        Self {
            max_retries: 5,
            base_delay: Duration::from_secs(1),
            max_delay: Duration::from_secs(60),
        }
    }
}

impl RetryPolicy {
    pub fn delay(&self, attempt: u32) -> Duration {
        self.base_delay
            .saturating_mul(1u32 << attempt.min(20))
            .min(self.max_delay)
    }
}

/// Spaces requests at least `60 / rpm` seconds apart across all threads.
#[derive(Debug)]
pub struct RateLimiter {
    interval: Option<Duration>,
    next: Mutex<Option<Instant>>,
}

impl RateLimiter {
    pub fn new(rpm: Option<f64>) -> Self {
        Self {
            interval: rpm.map(|r| Duration::from_secs_f64(60.0 / r)),
            next: Mutex::new(None),
        }
    }

    /// Blocks until this caller's slot.
    pub fn acquire(&self) {
        let Some(interval) = self.interval else {
            return;
        };
        let slot = {
            let mut next = self.next.lock().unwrap_or_else(|p| p.into_inner());
            let now = Instant::now();
            let slot = next.map_or(now, |n| n.max(now));
            *next = Some(slot + interval);
            slot
        };
        let now = Instant::now();
        if slot > now {
            thread::sleep(slot - now);
        }
    }
}

/// One query: the sample (mocks read its label), its image and the prompt.
#[derive(Debug, Clone, Copy)]
pub struct QueryRequest<'a> {
    pub sample: &'a Sample,
    pub image: &'a [u8],
    pub prompt: &'a str,
}

/// Shareable client for one endpoint. Cache hits never touch the network.
pub struct LlmClient {
    endpoint: ModelEndpoint,
    cache: ResponseCache,
    limiter: RateLimiter,
    retry: RetryPolicy,
    http: Option<reqwest::blocking::Client>,
    requests: AtomicU64,
}

fn now_ms() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_millis() as u64)
}

impl LlmClient {
    pub fn new(endpoint: ModelEndpoint, cache: ResponseCache) -> Result<Self> {
        endpoint.validate()?;
        let http = match endpoint.api_style {
            ApiStyle::LocalMock => None,
            _ => Some(
                reqwest::blocking::Client::builder()
                    .build()
                    .map_err(|e| Error::Config(format!("http client: {e}")))?,
            ),
        };
        Ok(Self {
            limiter: RateLimiter::new(endpoint.rate_limit_rpm),
            endpoint,
            cache,
            retry: RetryPolicy::default(),
            http,
            requests: AtomicU64::new(0),
        })
    }

    pub fn with_retry(mut self, retry: RetryPolicy) -> Self {
        self.retry = retry;
        self
    }

    pub fn endpoint(&self) -> &ModelEndpoint {
        &self.endpoint
    }

    pub fn cache(&self) -> &ResponseCache {
        &self.cache
    }

    /// Requests sent to the endpoint (mock calls included), retries counted.
    pub fn requests_sent(&self) -> u64 {
        self.requests.load(Ordering::Relaxed)
    }

    pub fn key_for(&self, req: &QueryRequest<'_>) -> CacheKey {
        CacheKey {
            sample_id: req.sample.id.clone(),
            endpoint: self.endpoint.name.clone(),
            prompt_sha256: sha256_hex(req.prompt.as_bytes()),
            image_sha256: sha256_hex(req.image),
        }
    }

    /// Returns the cached reply if there is one; otherwise queries the
    /// endpoint, persists the record, then returns it.
    pub fn query(&self, req: &QueryRequest<'_>) -> Result<ResponseRecord> {
        let key = self.key_for(req);
        if let Some(hit) = self.cache.get(&key) {
            return Ok(hit);
        }
        let record = |raw_text: String, latency_ms, pt, ct, error| ResponseRecord {
            sample_id: key.sample_id.clone(),
            endpoint: key.endpoint.clone(),
            prompt_sha256: key.prompt_sha256.clone(),
            image_sha256: key.image_sha256.clone(),
            raw_text,
            latency_ms,
            prompt_tokens: pt,
            completion_tokens: ct,
            retrieved_from_cache: false,
            timestamp_ms: now_ms(),
            error,
        };

        if let Some(behavior) = self.endpoint.mock {
            self.limiter.acquire();
            self.requests.fetch_add(1, Ordering::Relaxed);
            let text = mock_reply(behavior, req.sample, self.endpoint.max_tokens);
            let rec = record(text, 0, None, None, None);
            self.cache.put(&rec)?;
            return Ok(rec);
        }

        let key_value = match &self.endpoint.auth_env {
            Some(var) => Some(std::env::var(var).map_err(|_| Error::MissingAuth(var.clone()))?),
            None => None,
        };
        let client = self.http.as_ref().expect("hosted endpoints build an http client");
        let mut attempt = 0;
        loop {
            self.limiter.acquire();
            self.requests.fetch_add(1, Ordering::Relaxed);
            let started = Instant::now();
            match http::send(client, &self.endpoint, key_value.as_deref(), req.prompt, req.image) {
                Ok(reply) => {
                    let rec = record(
                        reply.text,
                        started.elapsed().as_millis() as u64,
                        reply.prompt_tokens,
                        reply.completion_tokens,
                        None,
                    );
                    self.cache.put(&rec)?;
                    return Ok(rec);
                }
                Err(Failure::Permanent { status, message }) => {
                    let tag = format!("http {status}: {message}");
                    let rec = record(String::new(), started.elapsed().as_millis() as u64, None, None, Some(tag));
                    self.cache.put(&rec)?;
                    return Err(Error::PermanentEndpoint {
                        endpoint: self.endpoint.name.clone(),
                        status,
                        message,
                    });
                }
                Err(Failure::Transient {
                    message,
                    retry_after,
                }) => {
                    if attempt >= self.retry.max_retries {
                        return Err(Error::TransientExhausted {
                            endpoint: self.endpoint.name.clone(),
                            attempts: attempt + 1,
                            message,
                        });
                    }
                    let wait = retry_after
                        .unwrap_or_else(|| self.retry.delay(attempt))
                        .min(self.retry.max_delay);
                    log::warn!(
                        "{}: {message}; retrying in {:?} ({}/{})",
                        self.endpoint.name,
                        wait,
                        attempt + 1,
                        self.retry.max_retries
                    );
                    thread::sleep(wait);
                    attempt += 1;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn backoff_doubles_and_caps() {
        let p = RetryPolicy {
            max_retries: 5,
            base_delay: Duration::from_millis(10),
            max_delay: Duration::from_millis(50),
        };
        let d: Vec<u128> = (0..5).map(|a| p.delay(a).as_millis()).collect();
        assert_eq!(d, [10, 20, 40, 50, 50]);
    }

    #[test]
    fn limiter_spacing() {
        let lim = RateLimiter::new(Some(1200.0)); // 50 ms apart
        let start = Instant::now();
        let mut stamps = Vec::new();
        for _ in 0..5 {
            lim.acquire();
            stamps.push(start.elapsed().as_secs_f64());
        }
        for w in stamps.windows(2) {
            let gap = w[1] - w[0];
            assert!(gap >= 0.045, "gap {gap}");
        }
    }
}
