//! CSV manifests and `.mg` dumps for enumeration runs.

use super::EnumerateError;
use crate::connectivity::cut_edges;
use crate::graph::{canonical_key, Multigraph};
use crate::spectral::lambda2;
use std::fs;
use std::path::{Path, PathBuf};

pub const MANIFEST_HEADER: &str = "family,key,n,num_cut_edges,lambda2";

/// One manifest line: a family member's identity and headline
/// invariants.
#[derive(Clone, Debug, PartialEq)]
pub struct ManifestRow {
    pub family: String,
    /// SHA-256 digest of the canonical key; also the `.mg` file stem.
    pub key: String,
    pub n: usize,
    pub num_cut_edges: usize,
    pub lambda2: f64,
}

impl ManifestRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{:.9}",
            self.family, self.key, self.n, self.num_cut_edges, self.lambda2
        )
    }
}

/// Rows for `members` in the given order. The builders emit canonical
/// key order, which keeps manifests identical run to run.
pub fn manifest_rows(family: &str, members: &[Multigraph]) -> Vec<ManifestRow> {
    members
        .iter()
        .map(|g| {
            let num_cut_edges = if g.is_connected() {
                cut_edges(g).expect("connected").len()
            } else {
                0
            };
            ManifestRow {
                family: family.to_string(),
                key: canonical_key(g).digest_hex(),
                n: g.n(),
                num_cut_edges,
                lambda2: lambda2(g).expect("members have at least two vertices"),
            }
        })
        .collect()
}

/// Writes one `.mg` file per member (named by key digest) plus
/// `manifest.csv` into `dir`, creating the directory if needed.
/// Returns the manifest path.
pub fn write_family(
    dir: &Path,
    family: &str,
    members: &[Multigraph],
) -> Result<PathBuf, EnumerateError> {
    fs::create_dir_all(dir)?;
    let rows = manifest_rows(family, members);
    for (row, g) in rows.iter().zip(members) {
        let mut text = g.to_mg();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        fs::write(dir.join(format!("{}.mg", row.key)), text)?;
    }
    let mut csv = String::from(MANIFEST_HEADER);
    csv.push('\n');
    for row in &rows {
        csv.push_str(&row.csv_line());
        csv.push('\n');
    }
    let path = dir.join("manifest.csv");
    fs::write(&path, csv)?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::build_b;

    #[test]
    fn writes_members_and_manifest() {
        let dir = tempfile::tempdir().unwrap();
        let b5 = build_b(5).unwrap();
        let path = write_family(dir.path(), "B5", &b5).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], MANIFEST_HEADER);
        assert_eq!(lines.len(), 1 + b5.len());
        for (line, g) in lines[1..].iter().zip(&b5) {
            let fields: Vec<&str> = line.split(',').collect();
            assert_eq!(fields.len(), 5);
            assert_eq!(fields[0], "B5");
            assert_eq!(fields[2], "5");
            assert_eq!(fields[3], "0", "blocks are bridgeless");
            let blob = fs::read_to_string(dir.path().join(format!("{}.mg", fields[1]))).unwrap();
            let parsed = Multigraph::parse_mg(&blob).unwrap();
            assert_eq!(canonical_key(&parsed), canonical_key(g));
            let written: f64 = fields[4].parse().unwrap();
            assert!((written - lambda2(g).unwrap()).abs() < 1e-6);
        }
    }

    #[test]
    fn manifest_is_deterministic() {
        let b5 = build_b(5).unwrap();
        let a = manifest_rows("B5", &b5);
        let b = manifest_rows("B5", &build_b(5).unwrap());
        assert_eq!(a, b);
    }
}
