//! Sweep specifications: a single value, a comma list, or `lo:hi:step`.

use std::str::FromStr;

/// A parsed sweep axis. Range syntax is inclusive of `hi` up to a half
/// step of rounding slack, so `0.1:1.0:0.1` yields exactly ten values.
#[derive(Debug, Clone, PartialEq)]
pub struct Sweep(pub Vec<f64>);

impl Sweep {
    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn is_scalar(&self) -> bool {
        self.0.len() == 1
    }
}

impl FromStr for Sweep {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |v: &str| -> Result<f64, String> {
            v.trim()
                .parse::<f64>()
                .map_err(|_| format!("malformed number `{v}` in `{s}`"))
        };
        if s.contains(':') {
            let parts: Vec<&str> = s.split(':').collect();
            if parts.len() != 3 {
                return Err(format!("malformed range `{s}` (expected lo:hi:step)"));
            }
            let (lo, hi, step) = (parse(parts[0])?, parse(parts[1])?, parse(parts[2])?);
            if !(step > 0.0) {
                return Err(format!("range `{s}` needs a positive step"));
            }
            if hi < lo {
                return Err(format!("range `{s}` runs backwards"));
            }
            let mut values = Vec::new();
            let mut k = 0u32;
            loop {
                let v = lo + step * k as f64;
                if v > hi + step * 1e-9 {
                    break;
                }
                values.push(v);
                k += 1;
            }
            Ok(Sweep(values))
        } else {
            let values = s.split(',').map(parse).collect::<Result<Vec<_>, _>>()?;
            if values.is_empty() {
                return Err(format!("empty sweep `{s}`"));
            }
            Ok(Sweep(values))
        }
    }
}
