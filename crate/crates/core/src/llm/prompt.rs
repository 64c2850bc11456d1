use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::domain::Granularity;

// The texts keep their original spellings; responses are only comparable
// when the prompts are byte-identical.
const POINT: &str = "Detect points of anomalies in this time series, in terms of the x-axis coordinate. List one by one in a list. For example, if points x=2, 51, and 106 are anomalies, then output \"[2, 51, 106]\". If there are no anomalies, answer with an empty list [].";

const RANGE: &str = "Detect ranges of anomalies in this time series, in terms of the x-axis coordinate. List one by one in a list. For example, if ranges (incluing two endpoints) [2, 11], [50, 60], and [105, 118], are anomalies, then output \"[[2, 11], [50, 60], [105, 118]]\". If there are no anomalies, answer with an empty list [].";

const VARIATE: &str = "Detect univaraite time series of anomalies in this multivariate time series, in terms of ID of univaraite time series. The image is a multivariate time series including multiple subimages to indicate multiple univariate time series. From left to right and top to bottom, the ID of each subimage increases by 1, starting from 0. List one by one in a list. For example, if ID=0, 2, and 5 are anomalous univaraite time series, then output \"[0, 2, 5]\". If there are no anomalies, answer with an empty list [].";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PromptTemplate {
    pub granularity: Granularity,
    pub text: &'static str,
}

impl PromptTemplate {
    /// Hex SHA-256 of the prompt text.
    pub fn sha256(&self) -> String {
        sha256_hex(self.text.as_bytes())
    }
}

pub fn build_prompt(granularity: Granularity) -> PromptTemplate {
    let text = match granularity {
        Granularity::Point => POINT,
        Granularity::Range => RANGE,
        Granularity::Variate => VARIATE,
    };
    PromptTemplate { granularity, text }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prompt_hashes_are_pinned() {
        assert_eq!(
            build_prompt(Granularity::Point).sha256(),
            "04a7a6f4fe8f5306afbca7e783a2bf6f91fa13e26118c04b366d1ce00b06f865"
        );
        assert_eq!(
            build_prompt(Granularity::Range).sha256(),
            "14d50159095ecc8f876420b4d0992ae96605cc71d37a22ee37d6eb3b4bbfb64f"
        );
        assert_eq!(
            build_prompt(Granularity::Variate).sha256(),
            "2be0d887231ada3e254ed6c3dcbcf2df8daa12304098f2cf0060a171dceb0d67"
        );
    }

    #[test]
    fn prompt_examples() {
        assert!(build_prompt(Granularity::Point).text.starts_with(
            "Detect points of anomalies in this time series, in terms of the x-axis coordinate."
        ));
        assert!(build_prompt(Granularity::Range)
            .text
            .contains("[[2, 11], [50, 60], [105, 118]]"));
        assert!(build_prompt(Granularity::Variate).text.contains("starting from 0"));
        assert!(build_prompt(Granularity::Range).text.contains("incluing"));
        assert!(build_prompt(Granularity::Variate).text.contains("univaraite"));
    }
}
