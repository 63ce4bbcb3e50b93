//! Append-only fundamental-unit cache: one `d x y norm` line per entry,
//! base 10. Entries failing the Pell identity are skipped with a warning;
//! duplicate radicands keep the first entry.

use std::collections::HashMap;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use polya_core::QuadUnit;

pub struct UnitCache {
    path: Option<PathBuf>,
    entries: HashMap<BigInt, QuadUnit>,
}

fn parse_line(line: &str) -> Option<QuadUnit> {
    let mut parts = line.split_whitespace();
    let d = BigInt::from_str(parts.next()?).ok()?;
    let x = BigInt::from_str(parts.next()?).ok()?;
    let y = BigInt::from_str(parts.next()?).ok()?;
    let norm: i8 = parts.next()?.parse().ok()?;
    if parts.next().is_some() || !matches!(norm, 1 | -1) {
        return None;
    }
    // Pell identity x^2 - d y^2 = 4 norm, re-validated on load
    if &x * &x - &d * &y * &y != BigInt::from(4 * norm as i64) {
        return None;
    }
    Some(QuadUnit { d, x, y, norm })
}

impl UnitCache {
    /// In-memory cache without persistence.
    pub fn ephemeral() -> Self {
        UnitCache {
            path: None,
            entries: HashMap::new(),
        }
    }

    pub fn load(path: &Path) -> Self {
        let mut entries = HashMap::new();
        if let Ok(text) = std::fs::read_to_string(path) {
            for (i, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                match parse_line(line) {
                    Some(u) => {
                        entries.entry(u.d.clone()).or_insert(u);
                    }
                    None => eprintln!(
                        "unit cache {}: skipping corrupt line {}",
                        path.display(),
                        i + 1
                    ),
                }
            }
        }
        UnitCache {
            path: Some(path.to_path_buf()),
            entries,
        }
    }

    pub fn get(&self, d: &BigInt) -> Option<&QuadUnit> {
        self.entries.get(d)
    }

    /// Record a freshly computed unit, appending to the backing file.
    pub fn store(&mut self, unit: QuadUnit) {
        if self.entries.contains_key(&unit.d) {
            return;
        }
        if let Some(path) = &self.path {
            let line = format!("{} {} {} {}\n", unit.d, unit.x, unit.y, unit.norm);
            let appended = OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .and_then(|mut f| f.write_all(line.as_bytes()));
            if let Err(e) = appended {
                eprintln!("unit cache {}: write failed: {e}", path.display());
            }
        }
        self.entries.insert(unit.d.clone(), unit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(d: i64, x: i64, y: i64, norm: i8) -> QuadUnit {
        QuadUnit {
            d: BigInt::from(d),
            x: BigInt::from(x),
            y: BigInt::from(y),
            norm,
        }
    }

    #[test]
    fn round_trip() {
        let dir = std::env::temp_dir().join(format!("polya-cache-{}", std::process::id()));
        let _ = std::fs::remove_file(&dir);
        let mut cache = UnitCache::load(&dir);
        cache.store(unit(5, 1, 1, -1));
        let text = std::fs::read_to_string(&dir).unwrap();
        assert_eq!(text, "5 1 1 -1\n");
        let reloaded = UnitCache::load(&dir);
        assert_eq!(reloaded.get(&BigInt::from(5)), Some(&unit(5, 1, 1, -1)));
        std::fs::remove_file(&dir).unwrap();
    }

    #[test]
    fn corrupt_lines_are_skipped() {
        assert!(parse_line("5 1 1 -1").is_some());
        assert!(parse_line("5 1 1 7").is_none()); // norm out of range
        assert!(parse_line("5 1 2 -1").is_none()); // Pell identity fails
        assert!(parse_line("5 1 1").is_none());
        assert!(parse_line("a b c d").is_none());
    }

    #[test]
    fn duplicates_keep_first() {
        let dir = std::env::temp_dir().join(format!("polya-cache-dup-{}", std::process::id()));
        std::fs::write(&dir, "3 4 2 1\n3 14 8 1\n").unwrap();
        let cache = UnitCache::load(&dir);
        assert_eq!(cache.get(&BigInt::from(3)), Some(&unit(3, 4, 2, 1)));
        std::fs::remove_file(&dir).unwrap();
    }

    #[test]
    fn empty_file_empty_cache() {
        let dir = std::env::temp_dir().join(format!("polya-cache-empty-{}", std::process::id()));
        std::fs::write(&dir, "").unwrap();
        let cache = UnitCache::load(&dir);
        assert!(cache.get(&BigInt::from(5)).is_none());
        std::fs::remove_file(&dir).unwrap();
    }
}
