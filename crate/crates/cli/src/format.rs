//! JSON ensemble and frame files.
//!
//! Every float is written as `{:.16e}` (17 significant digits), which
//! round-trips `f64` exactly.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use polyhopf::{AlgebraElement, AlgebraTag, PolygonConfig, Spinor, StiefelFrame, Vector};
use serde::{Deserialize, Serialize};
use serde_json::ser::Formatter;

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Ensemble {
    pub algebra: String,
    pub k: usize,
    pub n: usize,
    pub seed: u64,
    /// `polygons[p][i]` is edge i of polygon p, a vector in ℝⁿ.
    pub polygons: Vec<Vec<Vec<f64>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrameEnsemble {
    pub algebra: String,
    pub k: usize,
    pub seed: u64,
    /// `frames[f][i]` is column i of frame f as `[x coefficients, y coefficients]`.
    pub frames: Vec<Vec<[Vec<f64>; 2]>>,
}

struct Float17;

impl Formatter for Float17 {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Float17);
    value.serialize(&mut ser)?;
    out.push(b'\n');
    Ok(String::from_utf8(out).expect("serde_json writes UTF-8"))
}

pub fn write_output(path: Option<&Path>, contents: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, contents).map_err(|source| CliError::Io { path: p.to_path_buf(), source }),
        None => io::stdout().write_all(contents.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Parse { path: path.to_path_buf(), source })
}

pub fn parse_algebra(s: &str) -> Result<AlgebraTag> {
    s.parse().map_err(|_| CliError::Format(format!("unknown algebra {s:?}; expected R, C, H or O")))
}

impl Ensemble {
    pub fn new(tag: AlgebraTag, k: usize, seed: u64, polygons: &[PolygonConfig]) -> Self {
        Ensemble {
            algebra: tag.symbol().to_string(),
            k,
            n: tag.euclidean_dim(),
            seed,
            polygons: polygons.iter().map(|p| p.edges().iter().map(|e| e.as_slice().to_vec()).collect()).collect(),
        }
    }

    pub fn tag(&self) -> Result<AlgebraTag> {
        let tag = parse_algebra(&self.algebra)?;
        if tag.euclidean_dim() != self.n {
            return Err(CliError::Format(format!("algebra {} lives in R^{}, file says n = {}", self.algebra, tag.euclidean_dim(), self.n)));
        }
        Ok(tag)
    }

    /// Validated polygons.
    pub fn configs(&self) -> Result<Vec<PolygonConfig>> {
        self.tag()?;
        self.polygons
            .iter()
            .enumerate()
            .map(|(p, edges)| {
                if edges.len() != self.k {
                    return Err(CliError::Format(format!("polygon {p} has {} edges, expected k = {}", edges.len(), self.k)));
                }
                let edges = edges
                    .iter()
                    .map(|e| {
                        if e.len() != self.n {
                            return Err(CliError::Format(format!("polygon {p} has an edge of length {}, expected n = {}", e.len(), self.n)));
                        }
                        Ok(Vector::from_slice(e)?)
                    })
                    .collect::<Result<Vec<_>>>()?;
                PolygonConfig::new(edges).map_err(|e| CliError::Format(format!("polygon {p}: {e}")))
            })
            .collect()
    }
}

impl FrameEnsemble {
    pub fn new(tag: AlgebraTag, k: usize, seed: u64, frames: &[StiefelFrame]) -> Self {
        let column = |v: &Spinor| [v.x().coeffs().to_vec(), v.y().coeffs().to_vec()];
        FrameEnsemble {
            algebra: tag.symbol().to_string(),
            k,
            seed,
            frames: frames.iter().map(|f| f.columns().iter().map(column).collect()).collect(),
        }
    }

    pub fn frames(&self) -> Result<Vec<StiefelFrame>> {
        let tag = parse_algebra(&self.algebra)?;
        self.frames
            .iter()
            .enumerate()
            .map(|(f, columns)| {
                if columns.len() != self.k {
                    return Err(CliError::Format(format!("frame {f} has {} columns, expected k = {}", columns.len(), self.k)));
                }
                let columns = columns
                    .iter()
                    .map(|[x, y]| Ok(Spinor::new(AlgebraElement::new(tag, x)?, AlgebraElement::new(tag, y)?)?))
                    .collect::<Result<Vec<_>>>()?;
                StiefelFrame::new(columns).map_err(|e| CliError::Format(format!("frame {f}: {e}")))
            })
            .collect()
    }
}
