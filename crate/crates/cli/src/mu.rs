//! Command-line spelling of complex parameters.

use std::fmt;
use std::str::FromStr;

use trialab_core::reduce::ReductionKind;
use trialab_core::transform::{omega, omega2};
use trialab_core::Complex64;

/// `1`, `-1`, `w`, `w2`, a real number, or `RE+IMi` / `RE-IMi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MuArg {
    Omega,
    Omega2,
    Value(Complex64),
}

impl MuArg {
    pub fn value(self) -> Complex64 {
        match self {
            MuArg::Omega => omega(),
            MuArg::Omega2 => omega2(),
            MuArg::Value(z) => z,
        }
    }

    /// The reduction this parameter names, if it is one of `1, ω, ω²`.
    pub fn reduction_kind(self) -> Option<ReductionKind> {
        match self {
            MuArg::Omega => Some(ReductionKind::Omega),
            MuArg::Omega2 => Some(ReductionKind::Omega2),
            MuArg::Value(z) if z == Complex64::new(1.0, 0.0) => Some(ReductionKind::One),
            MuArg::Value(_) => None,
        }
    }
}

/// Splits `RE±IM` at the sign that starts the imaginary part.
fn split_complex(body: &str) -> Option<(&str, &str)> {
    let bytes = body.as_bytes();
    (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'))
        .map(|i| (&body[..i], &body[i..]))
}

impl FromStr for MuArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || format!("cannot parse `{s}` as mu: expected 1, -1, w, w2, a real, or RE+IMi");
        match s {
            "w" => return Ok(MuArg::Omega),
            "w2" => return Ok(MuArg::Omega2),
            _ => {}
        }
        let Some(body) = s.strip_suffix('i') else {
            return s.parse::<f64>().map(|re| MuArg::Value(Complex64::new(re, 0.0))).map_err(|_| bad());
        };
        let (re, im) = match split_complex(body) {
            Some((re, im)) => (re.parse::<f64>().map_err(|_| bad())?, im.parse::<f64>().map_err(|_| bad())?),
            None => (0.0, body.parse::<f64>().map_err(|_| bad())?),
        };
        Ok(MuArg::Value(Complex64::new(re, im)))
    }
}

impl fmt::Display for MuArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MuArg::Omega => write!(f, "w"),
            MuArg::Omega2 => write!(f, "w2"),
            MuArg::Value(z) if z.im == 0.0 => write!(f, "{}", z.re),
            MuArg::Value(z) => write!(f, "{}{}{}i", z.re, if z.im.is_sign_negative() { "-" } else { "+" }, z.im.abs()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(re: f64, im: f64) -> MuArg {
        MuArg::Value(Complex64::new(re, im))
    }

    #[test]
    fn parses_named_and_numeric_forms() {
        assert_eq!("1".parse::<MuArg>().unwrap(), v(1.0, 0.0));
        assert_eq!("-1".parse::<MuArg>().unwrap(), v(-1.0, 0.0));
        assert_eq!("w".parse::<MuArg>().unwrap().value(), Complex64::new(-0.5, 3f64.sqrt() / 2.0));
        assert_eq!("w2".parse::<MuArg>().unwrap().value(), omega2());
        assert_eq!("5.828427124746190+0i".parse::<MuArg>().unwrap(), v(5.82842712474619, 0.0));
        assert_eq!("0.5-2.25i".parse::<MuArg>().unwrap(), v(0.5, -2.25));
        assert_eq!("-1e-3+1E+2i".parse::<MuArg>().unwrap(), v(-1e-3, 100.0));
        assert_eq!("3i".parse::<MuArg>().unwrap(), v(0.0, 3.0));
        for bad in ["", "x", "1+i", "w3", "1+2j"] {
            assert!(bad.parse::<MuArg>().is_err(), "{bad}");
        }
    }

    #[test]
    fn print_then_parse_is_identity() {
        for mu in [MuArg::Omega, MuArg::Omega2, v(1.0, 0.0), v(-1.0, 0.0), v(0.1, -0.3), v(-2.5, 1e-20), v(0.0, -0.0)] {
            assert_eq!(mu.to_string().parse::<MuArg>().unwrap(), mu);
        }
    }

    #[test]
    fn reduction_kinds() {
        assert_eq!("1".parse::<MuArg>().unwrap().reduction_kind(), Some(ReductionKind::One));
        assert_eq!(MuArg::Omega2.reduction_kind(), Some(ReductionKind::Omega2));
        assert_eq!("-1".parse::<MuArg>().unwrap().reduction_kind(), None);
    }
}
