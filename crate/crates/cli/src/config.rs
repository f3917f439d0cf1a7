//! `key = value` files mirroring the command-line flags.
//!
//! Keys are the long flag names without the leading dashes; `_` and `-` are
//! interchangeable. Blank lines and everything after `#` are ignored.

use std::collections::BTreeMap;
use std::str::FromStr;

use crate::error::CliError;

pub const KNOWN_KEYS: [&str; 12] = [
    "n", "k", "k-list", "a", "a-start", "a-end", "a-steps", "method", "out", "max-n",
    "tables-only", "steps",
];

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfigFile {
    entries: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = i + 1;
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::Usage(format!(
                    "config line {lineno}: expected `key = value`, got `{line}`"
                )));
            };
            let key = key.trim().replace('_', "-").to_ascii_lowercase();
            if !KNOWN_KEYS.contains(&key.as_str()) {
                return Err(CliError::Usage(format!("config line {lineno}: unknown key `{key}`")));
            }
            let value = value.trim();
            if value.is_empty() {
                return Err(CliError::Usage(format!("config line {lineno}: `{key}` has no value")));
            }
            if entries.insert(key.clone(), value.to_owned()).is_some() {
                return Err(CliError::Usage(format!("config line {lineno}: `{key}` given twice")));
            }
        }
        Ok(Self { entries })
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError> {
        self.raw(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| CliError::Usage(format!("config: invalid value `{v}` for `{key}`")))
            })
            .transpose()
    }

    pub fn get_list<T: FromStr>(&self, key: &str) -> Result<Option<Vec<T>>, CliError> {
        self.raw(key)
            .map(|v| {
                v.split(',')
                    .map(|item| {
                        item.trim().parse().map_err(|_| {
                            CliError::Usage(format!("config: invalid list item `{item}` for `{key}`"))
                        })
                    })
                    .collect()
            })
            .transpose()
    }

    pub fn get_bool(&self, key: &str) -> Result<bool, CliError> {
        match self.raw(key) {
            None | Some("false") | Some("no") | Some("0") => Ok(false),
            Some("true") | Some("yes") | Some("1") => Ok(true),
            Some(v) => Err(CliError::Usage(format!("config: invalid boolean `{v}` for `{key}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_lists() {
        let cfg = ConfigFile::parse(
            "# sweep for the balanced case\nn = 8\nk_list = 1, 2,3 # trailing\n\na-steps=50\ntables-only = yes\n",
        )
        .unwrap();
        assert_eq!(cfg.get::<u32>("n").unwrap(), Some(8));
        assert_eq!(cfg.get_list::<u32>("k-list").unwrap(), Some(vec![1, 2, 3]));
        assert_eq!(cfg.get::<usize>("a-steps").unwrap(), Some(50));
        assert_eq!(cfg.get::<f64>("a").unwrap(), None);
        assert!(cfg.get_bool("tables-only").unwrap());
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(ConfigFile::parse("n 8").is_err());
        assert!(ConfigFile::parse("colour = red").is_err());
        assert!(ConfigFile::parse("n =").is_err());
        assert!(ConfigFile::parse("n = 1\nn = 2").is_err());
        let cfg = ConfigFile::parse("n = eight").unwrap();
        assert!(cfg.get::<u32>("n").is_err());
    }
}
