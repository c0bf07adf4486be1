//! Number formatting and the output sink.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

/// Fifteen significant digits, fixed notation between `1e-4` and `1e15`.
pub fn sig15(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let mag = x.abs().log10().floor() as i32;
    if (-4..15).contains(&mag) {
        let decimals = (14 - mag).max(0) as usize;
        let s = format!("{x:.decimals$}");
        // rounding can carry into a new leading digit
        if s.trim_start_matches('-')
            .replace('.', "")
            .trim_start_matches('0')
            .len()
            > 15
        {
            let decimals = decimals.saturating_sub(1);
            return format!("{x:.decimals$}");
        }
        s
    } else {
        format!("{x:.14e}")
    }
}

/// Scientific notation used in CSV tables.
pub fn sci(x: f64) -> String {
    format!("{x:.6e}")
}

pub fn sink(out: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    })
}
