//! Sweep configuration files: one `key = value` per line, `#` starts a
//! comment, a repeated key adds another grid value, and a value may also be
//! a comma-separated list.

use std::collections::BTreeMap;

use besselsum::Error;

pub type Config = BTreeMap<String, Vec<String>>;

const KEYS: [&str; 10] = ["kind", "nu", "p", "a", "x", "mu", "method", "format", "tol", "max_terms"];

pub fn parse(text: &str) -> Result<Config, Error> {
    let mut out = Config::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Domain(format!("config line {}: expected key = value", lineno + 1)));
        };
        let key = key.trim();
        if !KEYS.contains(&key) {
            return Err(Error::Domain(format!("config line {}: unknown key '{key}'", lineno + 1)));
        }
        let entry = out.entry(key.to_string()).or_default();
        for item in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            entry.push(item.to_string());
        }
    }
    Ok(out)
}

pub fn reals(config: &Config, key: &str) -> Result<Vec<f64>, Error> {
    config
        .get(key)
        .map(|vals| {
            vals.iter()
                .map(|v| v.parse::<f64>().map_err(|_| Error::Domain(format!("config key '{key}': '{v}' is not a number"))))
                .collect()
        })
        .unwrap_or_else(|| Ok(Vec::new()))
}
