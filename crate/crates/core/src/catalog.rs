//! On-disk catalog of triangulations, equivalence classes, quivers and
//! relations for one polygon size.
//!
//! Layout under a root directory:
//!
//! ```text
//! n=<k>/triangulations.jsonl   header {"n","count"}, then one triangulation per line
//! n=<k>/classes.jsonl          header {"n","count"}, then one class record per line
//! n=<k>/meta.json              tool version, counts, type census, sha256 checksums
//! ```

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::geometry::Polygon;
use crate::quiver::{relations_of, Quiver, QuiverAtlas, RelationSet};
use crate::triangulation::{classes, enumerate_all, Triangulation, TriangulationType};

pub const TRIANGULATIONS_FILE: &str = "triangulations.jsonl";
pub const CLASSES_FILE: &str = "classes.jsonl";
pub const META_FILE: &str = "meta.json";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub n: u32,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverRecord {
    pub vertices: Vec<String>,
    pub arrows: Vec<[String; 2]>,
}

impl<L: Clone + PartialEq + std::fmt::Display> From<&Quiver<L>> for QuiverRecord {
    fn from(q: &Quiver<L>) -> Self {
        let vertices: Vec<String> = q.labels().iter().map(ToString::to_string).collect();
        let arrows = q.arrows().map(|(i, j)| [vertices[i].clone(), vertices[j].clone()]).collect();
        QuiverRecord { vertices, arrows }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RelationRecord {
    pub zero_paths: Vec<Vec<String>>,
    pub commutativity_pairs: Vec<[Vec<String>; 2]>,
}

impl From<&RelationSet> for RelationRecord {
    fn from(r: &RelationSet) -> Self {
        let tok = |p: &Vec<crate::geometry::TaggedEdge>| p.iter().map(ToString::to_string).collect::<Vec<_>>();
        RelationRecord {
            zero_paths: r.zero_paths.iter().map(tok).collect(),
            commutativity_pairs: r.commutativity_pairs.iter().map(|(a, b)| [tok(a), tok(b)]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassRecord {
    pub representative: Triangulation,
    pub orbit_size: usize,
    #[serde(rename = "type")]
    pub kind: TriangulationType,
    pub quiver: QuiverRecord,
    pub relations: RelationRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Meta {
    pub tool_version: String,
    pub n: u32,
    pub triangulation_count: usize,
    pub class_count: usize,
    /// Number of classes of each type.
    pub class_census: BTreeMap<String, usize>,
    /// Number of triangulations of each type.
    pub triangulation_census: BTreeMap<String, usize>,
    /// sha256 of each data file, hex encoded.
    pub checksums: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub n: u32,
    pub triangulations: Vec<Triangulation>,
    pub classes: Vec<ClassRecord>,
    pub meta: Meta,
}

fn jsonl<T: Serialize>(n: u32, items: &[T]) -> Result<String> {
    let mut out = serde_json::to_string(&Header { n, count: items.len() }).map_err(json_err)?;
    out.push('\n');
    for item in items {
        out.push_str(&serde_json::to_string(item).map_err(json_err)?);
        out.push('\n');
    }
    Ok(out)
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Catalog(e.to_string())
}

fn sha256_hex(data: &str) -> String {
    hex::encode(Sha256::digest(data.as_bytes()))
}

/// Directory holding the catalog of size `n` under `root`.
pub fn size_dir(root: &Path, n: u32) -> PathBuf {
    root.join(format!("n={n}"))
}

impl Catalog {
    /// Enumerates, classifies and attaches transported quivers and relation
    /// sets to every class representative.
    pub fn build(polygon: Polygon) -> Result<Self> {
        let n = polygon.n();
        let triangulations = enumerate_all(polygon);
        let atlas = QuiverAtlas::build(polygon)?;
        let mut records = Vec::new();
        for class in classes(&triangulations)? {
            let q = atlas.get(&class.representative)?;
            let rel = relations_of(&class.representative, q)?;
            records.push(ClassRecord {
                quiver: q.into(),
                relations: (&rel).into(),
                representative: class.representative,
                orbit_size: class.orbit_size,
                kind: class.kind,
            });
        }
        let mut triangulation_census: BTreeMap<String, usize> = TriangulationType::ALL.iter().map(|t| (t.to_string(), 0)).collect();
        for t in &triangulations {
            *triangulation_census.get_mut(&t.classify_type()?.to_string()).unwrap() += 1;
        }
        let mut class_census: BTreeMap<String, usize> = TriangulationType::ALL.iter().map(|t| (t.to_string(), 0)).collect();
        for c in &records {
            *class_census.get_mut(&c.kind.to_string()).unwrap() += 1;
        }
        let mut catalog = Catalog {
            n,
            meta: Meta {
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
                n,
                triangulation_count: triangulations.len(),
                class_count: records.len(),
                class_census,
                triangulation_census,
                checksums: BTreeMap::new(),
            },
            triangulations,
            classes: records,
        };
        let (tri, cls) = catalog.render_data()?;
        catalog.meta.checksums =
            BTreeMap::from([(TRIANGULATIONS_FILE.to_string(), sha256_hex(&tri)), (CLASSES_FILE.to_string(), sha256_hex(&cls))]);
        Ok(catalog)
    }

    fn render_data(&self) -> Result<(String, String)> {
        Ok((jsonl(self.n, &self.triangulations)?, jsonl(self.n, &self.classes)?))
    }

    fn render_meta(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(&self.meta).map_err(json_err)?;
        s.push('\n');
        Ok(s)
    }

    /// Writes the three files under `root/n=<k>/` and returns that directory.
    pub fn write(&self, root: &Path) -> Result<PathBuf> {
        let dir = size_dir(root, self.n);
        let io = |e: std::io::Error| Error::Catalog(format!("{}: {e}", dir.display()));
        fs::create_dir_all(&dir).map_err(io)?;
        let (tri, cls) = self.render_data()?;
        fs::write(dir.join(TRIANGULATIONS_FILE), tri).map_err(io)?;
        fs::write(dir.join(CLASSES_FILE), cls).map_err(io)?;
        fs::write(dir.join(META_FILE), self.render_meta()?).map_err(io)?;
        Ok(dir)
    }

    /// Reads and checks a catalog: header counts, checksums and canonical
    /// representatives.
    pub fn read(root: &Path, n: u32) -> Result<Self> {
        let dir = size_dir(root, n);
        let read =
            |name: &str| fs::read_to_string(dir.join(name)).map_err(|e| Error::Catalog(format!("{}: {e}", dir.join(name).display())));
        let (tri_text, cls_text, meta_text) = (read(TRIANGULATIONS_FILE)?, read(CLASSES_FILE)?, read(META_FILE)?);
        let meta: Meta = serde_json::from_str(&meta_text).map_err(json_err)?;
        for (name, text) in [(TRIANGULATIONS_FILE, &tri_text), (CLASSES_FILE, &cls_text)] {
            let expected = meta.checksums.get(name).ok_or_else(|| Error::Catalog(format!("no checksum for {name}")))?;
            if &sha256_hex(text) != expected {
                return Err(Error::Catalog(format!("checksum mismatch for {name}")));
            }
        }
        let triangulations: Vec<Triangulation> = parse_jsonl(n, &tri_text, TRIANGULATIONS_FILE)?;
        let classes: Vec<ClassRecord> = parse_jsonl(n, &cls_text, CLASSES_FILE)?;
        if meta.n != n || meta.triangulation_count != triangulations.len() || meta.class_count != classes.len() {
            return Err(Error::Catalog("meta.json counts disagree with the data files".into()));
        }
        if let Some(c) = classes.iter().find(|c| c.representative.canonical_form().0 != c.representative) {
            return Err(Error::Catalog(format!("class representative {} is not canonical", c.representative)));
        }
        Ok(Catalog { n, triangulations, classes, meta })
    }
}

fn parse_jsonl<T: for<'de> Deserialize<'de>>(n: u32, text: &str, name: &str) -> Result<Vec<T>> {
    let mut lines = text.lines();
    let header: Header = serde_json::from_str(lines.next().ok_or_else(|| Error::Catalog(format!("{name} is empty")))?)
        .map_err(|e| Error::Catalog(format!("{name} header: {e}")))?;
    let items = lines
        .enumerate()
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| Error::Catalog(format!("{name} line {}: {e}", i + 2))))
        .collect::<Result<Vec<T>>>()?;
    if header.n != n || header.count != items.len() {
        return Err(Error::Catalog(format!("{name} header says n={} count={}, found {} records", header.n, header.count, items.len())));
    }
    Ok(items)
}
