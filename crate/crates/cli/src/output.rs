use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;

use crate::error::CliError;

/// A named pass/fail check recorded by an experiment.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, detail: String) -> Self {
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

/// Everything an experiment produces.
#[derive(Clone, Debug)]
pub struct Artifacts {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub json: Value,
    /// `(file name, svg)`; the first is `plot.svg`.
    pub plots: Vec<(String, String)>,
    pub checks: Vec<Check>,
}

impl Artifacts {
    /// CSV with a trailing `config_hash` column on every row.
    pub fn csv(&self, hash: &str) -> String {
        let mut out = self.columns.join(",");
        out.push_str(",config_hash\n");
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push(',');
            out.push_str(hash);
            out.push('\n');
        }
        out
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// Writes `contents` to `dir/name` through a temporary file and a rename.
pub fn write_atomic(dir: &Path, name: &str, contents: &[u8]) -> Result<PathBuf, CliError> {
    std::fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.as_file().sync_all()?;
    let target = dir.join(name);
    tmp.persist(&target).map_err(|e| CliError::Io(e.error))?;
    Ok(target)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atomic_write_replaces() {
        let dir = tempfile::tempdir().unwrap();
        write_atomic(dir.path(), "a.txt", b"one").unwrap();
        let p = write_atomic(dir.path(), "a.txt", b"two").unwrap();
        assert_eq!(std::fs::read_to_string(p).unwrap(), "two");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }

    #[test]
    fn every_row_has_the_hash() {
        let a = Artifacts {
            columns: vec!["n".into()],
            rows: vec![vec!["0".into()], vec!["1".into()]],
            json: Value::Null,
            plots: vec![],
            checks: vec![],
        };
        let csv = a.csv("abc");
        assert_eq!(csv, "n,config_hash\n0,abc\n1,abc\n");
    }
}
