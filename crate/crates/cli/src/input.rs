//! Session input: command-line flags merged over an optional `key = value` file.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use colonlab_core::{Error, Field, Ideal, MonomialOrder, Polynomial, Result, Ring};

/// Keys accepted in an input file, mirroring the long flags.
const KEYS: &[&str] = &[
    "field",
    "vars",
    "order",
    "gens",
    "ideal2",
    "seed",
    "count",
    "poly",
    "max-degree",
];

/// Raw string settings before parsing into algebra objects.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Settings {
    pub field: Option<String>,
    pub vars: Option<String>,
    pub order: Option<String>,
    /// Generators, already split.
    pub gens: Option<Vec<String>>,
    pub ideal2: Option<Vec<String>>,
    pub seed: Option<u64>,
    pub count: Option<usize>,
    pub poly: Option<String>,
    pub max_degree: Option<u32>,
}

impl Settings {
    /// Fills every unset field of `self` from `fallback`.
    pub fn or(self, fallback: Settings) -> Settings {
        Settings {
            field: self.field.or(fallback.field),
            vars: self.vars.or(fallback.vars),
            order: self.order.or(fallback.order),
            gens: self.gens.or(fallback.gens),
            ideal2: self.ideal2.or(fallback.ideal2),
            seed: self.seed.or(fallback.seed),
            count: self.count.or(fallback.count),
            poly: self.poly.or(fallback.poly),
            max_degree: self.max_degree.or(fallback.max_degree),
        }
    }

    pub fn from_file(path: &Path) -> Result<Settings> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
        Settings::parse_file(&text)
    }

    /// Parses `key = value` lines; `#` starts a comment line, generator lists
    /// are separated by `;`.
    pub fn parse_file(text: &str) -> Result<Settings> {
        let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
        let mut out = Settings::default();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::Parse {
                    line: line_no,
                    column: 1,
                    message: "expected `key = value`".into(),
                });
            };
            let key = key.trim();
            let value = value.trim();
            let Some(&known) = KEYS.iter().find(|k| **k == key) else {
                return Err(Error::Parse {
                    line: line_no,
                    column: 1,
                    message: format!("unknown key `{key}`"),
                });
            };
            if let Some(first) = seen.insert(known, line_no) {
                return Err(Error::Parse {
                    line: line_no,
                    column: 1,
                    message: format!("duplicate key `{key}` (first set on line {first})"),
                });
            }
            let bad_number = |what: &str| Error::Parse {
                line: line_no,
                column: raw.find('=').map_or(1, |c| c + 2),
                message: format!("`{value}` is not a valid {what}"),
            };
            match known {
                "field" => out.field = Some(value.to_string()),
                "vars" => out.vars = Some(value.to_string()),
                "order" => out.order = Some(value.to_string()),
                "gens" => out.gens = Some(split_list(value, ';')),
                "ideal2" => out.ideal2 = Some(split_list(value, ';')),
                "poly" => out.poly = Some(value.to_string()),
                "seed" => out.seed = Some(value.parse().map_err(|_| bad_number("seed"))?),
                "count" => out.count = Some(value.parse().map_err(|_| bad_number("count"))?),
                "max-degree" => {
                    out.max_degree = Some(value.parse().map_err(|_| bad_number("degree"))?)
                }
                _ => unreachable!("key list and match arms agree"),
            }
        }
        Ok(out)
    }

    pub fn ring(&self) -> Result<Arc<Ring>> {
        let field = Field::parse(self.field.as_deref().unwrap_or("F32003"))?;
        let order = MonomialOrder::parse(self.order.as_deref().unwrap_or("degrevlex"))?;
        let vars_text = self
            .vars
            .as_deref()
            .ok_or_else(|| Error::Usage("missing --vars".into()))?;
        let vars = split_list(vars_text, ',');
        Ring::new(&vars, field, order)
    }

    pub fn ideal(&self, ring: &Arc<Ring>) -> Result<Ideal> {
        let gens = self
            .gens
            .as_ref()
            .ok_or_else(|| Error::Usage("missing --gens".into()))?;
        Ideal::new(ring, parse_polys(gens, ring)?)
    }

    /// The second ideal, if given.
    pub fn ideal2(&self, ring: &Arc<Ring>) -> Result<Option<Ideal>> {
        self.ideal2
            .as_ref()
            .map(|g| Ideal::new(ring, parse_polys(g, ring)?))
            .transpose()
    }

    pub fn generators(&self, ring: &Arc<Ring>) -> Result<Vec<Polynomial>> {
        let gens = self
            .gens
            .as_ref()
            .ok_or_else(|| Error::Usage("missing --gens".into()))?;
        parse_polys(gens, ring)
    }
}

/// Splits on `sep`, trimming entries; an all-blank input yields no entries.
pub fn split_list(text: &str, sep: char) -> Vec<String> {
    if text.trim().is_empty() {
        return Vec::new();
    }
    text.split(sep).map(|s| s.trim().to_string()).collect()
}

fn parse_polys(texts: &[String], ring: &Arc<Ring>) -> Result<Vec<Polynomial>> {
    texts
        .iter()
        .enumerate()
        .map(|(k, t)| {
            if t.is_empty() {
                return Err(Error::Usage(format!("generator {} is empty", k + 1)));
            }
            Polynomial::parse(t, ring).map_err(|e| match e {
                Error::Parse {
                    line,
                    column,
                    message,
                } => Error::Parse {
                    line,
                    column,
                    message: format!("in generator {} `{t}`: {message}", k + 1),
                },
                other => other,
            })
        })
        .collect()
}
