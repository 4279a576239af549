use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Identifier locale. Each code maps to one representative regional
/// convention (zh follows mainland China, es Spain, hi India, fr France,
/// bn Bangladesh).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Locale {
    #[serde(rename = "en_US")]
    EnUs,
    #[serde(rename = "en_GB")]
    EnGb,
    #[serde(rename = "en_AU")]
    EnAu,
    #[serde(rename = "en_CA")]
    EnCa,
    #[serde(rename = "zh")]
    Zh,
    #[serde(rename = "es")]
    Es,
    #[serde(rename = "hi")]
    Hi,
    #[serde(rename = "fr")]
    Fr,
    #[serde(rename = "bn")]
    Bn,
}

impl Locale {
    pub const ALL: [Locale; 9] = [
        Locale::EnUs,
        Locale::EnGb,
        Locale::EnAu,
        Locale::EnCa,
        Locale::Zh,
        Locale::Es,
        Locale::Hi,
        Locale::Fr,
        Locale::Bn,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Locale::EnUs => "en_US",
            Locale::EnGb => "en_GB",
            Locale::EnAu => "en_AU",
            Locale::EnCa => "en_CA",
            Locale::Zh => "zh",
            Locale::Es => "es",
            Locale::Hi => "hi",
            Locale::Fr => "fr",
            Locale::Bn => "bn",
        }
    }
}

impl fmt::Display for Locale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown locale `{0}` (expected one of en_US, en_GB, en_AU, en_CA, zh, es, hi, fr, bn)")]
pub struct UnknownLocale(pub String);

impl FromStr for Locale {
    type Err = UnknownLocale;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Locale::ALL
            .into_iter()
            .find(|l| l.code() == s)
            .ok_or_else(|| UnknownLocale(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_round_trip() {
        for l in Locale::ALL {
            assert_eq!(l.code().parse::<Locale>().unwrap(), l);
            let json = serde_json::to_string(&l).unwrap();
            assert_eq!(json, format!("\"{}\"", l.code()));
        }
        assert!("ar".parse::<Locale>().is_err());
    }
}
