//! JSON wire formats shared with the command-line driver.
//!
//! Rationals travel as `"p/q"` strings, dyadics as `"m*2^-e"`, binary words
//! as `"0101"` strings.

/// Serde adapter for a [`Rational`](crate::Rational) as a `"p/q"` string.
pub mod rational_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::foundations::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(q)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<Rational>`.
pub mod rational_vec {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::foundations::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|q| q.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Serde adapter for a [`Dyadic`](crate::Dyadic) as an exact `"p/q"` string.
pub mod dyadic_str {
    use serde::Serializer;

    use crate::foundations::Dyadic;

    pub fn serialize<S: Serializer>(d: &Dyadic, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&d.to_rational())
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
pub struct PwlJson {
    pub breakpoints: Vec<(String, String)>,
}

impl TryFrom<PwlJson> for crate::apps::PwlFunction {
    type Error = crate::Error;

    fn try_from(j: PwlJson) -> crate::Result<Self> {
        let points = j
            .breakpoints
            .iter()
            .map(|(t, v)| {
                Ok((
                    crate::foundations::parse_rational(t)?,
                    crate::foundations::parse_rational(v)?,
                ))
            })
            .collect::<crate::Result<Vec<_>>>()?;
        crate::apps::PwlFunction::new(points)
    }
}

impl From<crate::apps::PwlFunction> for PwlJson {
    fn from(f: crate::apps::PwlFunction) -> Self {
        PwlJson {
            breakpoints: f
                .breakpoints()
                .iter()
                .map(|(t, v)| (t.to_string(), v.to_string()))
                .collect(),
        }
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
pub struct GameJson {
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<String>>,
}

fn parse_matrix(m: &[Vec<String>]) -> crate::Result<Vec<Vec<crate::Rational>>> {
    m.iter()
        .map(|row| row.iter().map(|s| crate::foundations::parse_rational(s)).collect())
        .collect()
}

impl TryFrom<GameJson> for crate::apps::BimatrixGame {
    type Error = crate::Error;

    fn try_from(j: GameJson) -> crate::Result<Self> {
        crate::apps::BimatrixGame::new(parse_matrix(&j.a)?, parse_matrix(&j.b)?)
    }
}

impl From<crate::apps::BimatrixGame> for GameJson {
    fn from(g: crate::apps::BimatrixGame) -> Self {
        let show = |m: &[Vec<crate::Rational>]| m.iter().map(|r| r.iter().map(|q| q.to_string()).collect()).collect();
        GameJson {
            a: show(g.a()),
            b: show(g.b()),
        }
    }
}

/// `{"excluded": ["00", "1011", …]}`.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct TreeJson {
    pub excluded: Vec<crate::sets::Word>,
}

impl From<TreeJson> for crate::sets::CoTree {
    fn from(j: TreeJson) -> Self {
        crate::sets::CoTree::from_excluded(j.excluded)
    }
}

impl From<&crate::sets::CoTree> for TreeJson {
    fn from(t: &crate::sets::CoTree) -> Self {
        TreeJson {
            excluded: t.excluded().to_vec(),
        }
    }
}

/// `{"epsilon": "1/2", "word": "01", "depth": 10}`.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct SvcQuery {
    pub epsilon: String,
    #[serde(default)]
    pub word: crate::sets::Word,
    #[serde(default)]
    pub depth: usize,
}

/// `{"x": "1/3", "y": "2/3"}`.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct RdivJson {
    pub x: String,
    pub y: String,
}

/// Two independent trees: `F` runs on `f`, `G` on `g`.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct ComposeJson {
    pub f: TreeJson,
    pub g: TreeJson,
}

/// A finite majority-vote oracle: `{"depth": 3, "outputs": {"000": "1/3", …, "111": null}}`.
/// Words missing from `outputs` count as inconsistent.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct MajorityJson {
    pub depth: usize,
    pub outputs: std::collections::BTreeMap<crate::sets::Word, Option<String>>,
}

impl MajorityJson {
    /// Centers by word, rounded to dyadics at precision `k + 8`.
    pub fn centers(&self, k: u32) -> crate::Result<std::collections::BTreeMap<crate::sets::Word, crate::Dyadic>> {
        let mut out = std::collections::BTreeMap::new();
        for (w, v) in &self.outputs {
            if w.len() != self.depth {
                return Err(crate::Error::Shape(format!(
                    "oracle word {w} is not of length {}",
                    self.depth
                )));
            }
            if let Some(v) = v {
                let q = crate::foundations::parse_rational(v)?;
                out.insert(w.clone(), crate::Dyadic::round_rational(&q, k + 8));
            }
        }
        Ok(out)
    }
}
