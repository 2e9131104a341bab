//! JSON documents: triangulation files and web files.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use webcoord_core::surface::{RawEdge, RawSide};
use webcoord_core::{Honeycomb, HoneycombDir, IdealTriangulation, Letter, TriangleWeb};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SideDoc {
    pub tri: String,
    /// 1-based.
    pub slot: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub id: String,
    pub sides: Vec<SideDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangulationDoc {
    pub triangles: Vec<String>,
    pub edges: Vec<EdgeDoc>,
}

impl TriangulationDoc {
    pub fn validate(&self) -> Result<IdealTriangulation, CliError> {
        let edges = self
            .edges
            .iter()
            .map(|e| RawEdge {
                id: e.id.clone(),
                sides: e
                    .sides
                    .iter()
                    .map(|s| RawSide {
                        tri: s.tri.clone(),
                        slot: s.slot,
                    })
                    .collect(),
            })
            .collect();
        Ok(IdealTriangulation::new(self.triangles.clone(), edges)?)
    }

    pub fn from_triangulation(tri: &IdealTriangulation) -> Self {
        let (triangles, edges) = tri.to_raw();
        Self {
            triangles,
            edges: edges
                .into_iter()
                .map(|e| EdgeDoc {
                    id: e.id,
                    sides: e
                        .sides
                        .into_iter()
                        .map(|s| SideDoc {
                            tri: s.tri,
                            slot: s.slot,
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DirDoc {
    None,
    In,
    Out,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HoneycombDoc {
    pub dir: DirDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangleWebDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub honeycomb: Option<HoneycombDoc>,
    pub corners: [String; 3],
}

impl TriangleWebDoc {
    pub fn to_web(&self) -> Result<TriangleWeb, CliError> {
        let honeycomb = match &self.honeycomb {
            None => None,
            Some(HoneycombDoc { dir: DirDoc::None, n }) => match n {
                None | Some(0) => None,
                Some(n) => return Err(CliError::Invalid(format!("honeycomb with dir none has n = {n}"))),
            },
            Some(HoneycombDoc { dir, n }) => {
                let dir = if *dir == DirDoc::In {
                    HoneycombDir::In
                } else {
                    HoneycombDir::Out
                };
                let n = n.ok_or_else(|| CliError::Invalid("honeycomb is missing n".into()))?;
                Some(
                    Honeycomb::new(dir, n)
                        .ok_or_else(|| CliError::Invalid("honeycomb with n = 0 needs dir none".into()))?,
                )
            }
        };
        let corners = [
            Letter::parse_word(&self.corners[0])?,
            Letter::parse_word(&self.corners[1])?,
            Letter::parse_word(&self.corners[2])?,
        ];
        Ok(TriangleWeb::new(honeycomb, corners)?)
    }

    pub fn from_web(w: &TriangleWeb) -> Self {
        Self {
            honeycomb: Some(match w.honeycomb() {
                None => HoneycombDoc {
                    dir: DirDoc::None,
                    n: None,
                },
                Some(h) => HoneycombDoc {
                    dir: match h.dir {
                        HoneycombDir::In => DirDoc::In,
                        HoneycombDir::Out => DirDoc::Out,
                    },
                    n: Some(h.n),
                },
            }),
            corners: w.corners().clone().map(|c| Letter::word_string(&c)),
        }
    }
}

/// A triangulation given by path (relative to the web file) or inline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TriangulationRef {
    Path(String),
    Inline(TriangulationDoc),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WebDoc {
    pub triangulation: TriangulationRef,
    pub webs: BTreeMap<String, TriangleWebDoc>,
}

impl WebDoc {
    /// Inline document for a web on `tri`.
    pub fn new(tri: &IdealTriangulation, webs: &[TriangleWeb]) -> Self {
        Self {
            triangulation: TriangulationRef::Inline(TriangulationDoc::from_triangulation(tri)),
            webs: tri
                .triangles()
                .iter()
                .zip(webs)
                .map(|(name, w)| (name.clone(), TriangleWebDoc::from_web(w)))
                .collect(),
        }
    }

    /// Per-triangle webs in triangulation order. Every triangle must be listed.
    pub fn triangle_webs(&self, tri: &IdealTriangulation) -> Result<Vec<TriangleWeb>, CliError> {
        if let Some(name) = self.webs.keys().find(|k| tri.triangle_index(k).is_none()) {
            return Err(CliError::Invalid(format!(
                "web given for unknown triangle {name}"
            )));
        }
        tri.triangles()
            .iter()
            .map(|name| {
                self.webs
                    .get(name)
                    .ok_or_else(|| CliError::Invalid(format!("no web given for triangle {name}")))?
                    .to_web()
            })
            .collect()
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

pub fn load_triangulation(path: &Path) -> Result<IdealTriangulation, CliError> {
    read_json::<TriangulationDoc>(path)?.validate()
}

/// A web file with its triangulation resolved.
pub struct LoadedWeb {
    pub tri: IdealTriangulation,
    pub webs: Vec<TriangleWeb>,
}

pub fn load_web(path: &Path) -> Result<LoadedWeb, CliError> {
    let doc: WebDoc = read_json(path)?;
    let tri = match &doc.triangulation {
        TriangulationRef::Inline(t) => t.validate()?,
        TriangulationRef::Path(p) => {
            let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
            load_triangulation(&resolve(&base, p))?
        }
    };
    let webs = doc.triangle_webs(&tri)?;
    Ok(LoadedWeb { tri, webs })
}

fn resolve(base: &Path, p: &str) -> PathBuf {
    let p = Path::new(p);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}
