//! CSV text with a fixed float format (17 significant digits) and `\n` line
//! endings, so identical inputs give byte-identical files.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone)]
pub struct CsvTable {
    text: String,
    columns: usize,
}

impl CsvTable {
    pub fn new(header: &[&str]) -> Self {
        let mut text = header.join(",");
        text.push('\n');
        CsvTable {
            text,
            columns: header.len(),
        }
    }

    pub fn row(&mut self, fields: &[Field]) {
        debug_assert_eq!(fields.len(), self.columns);
        for (i, f) in fields.iter().enumerate() {
            if i > 0 {
                self.text.push(',');
            }
            match f {
                Field::F(x) => self.text.push_str(&fmt_f64(*x)),
                Field::I(n) => write!(self.text, "{n}").expect("writing to a String"),
                Field::S(s) => self.text.push_str(s),
            }
        }
        self.text.push('\n');
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn write_to(&self, path: &Path) -> Result<()> {
        std::fs::write(path, &self.text).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })
    }
}

/// One CSV cell.
#[derive(Debug, Clone)]
pub enum Field {
    F(f64),
    I(i64),
    S(String),
}
