use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Polynomial;
use crate::error::{Error, Result};

/// Parses literals such as `1+x`, `-x`, `3/2*x^2-1` or `7`.
///
/// Terms are `[coeff][*]x[^deg]` or a bare coefficient, where a coefficient is
/// an integer or `num/den`. Whitespace is ignored.
pub fn parse_polynomial(input: &str) -> Result<Polynomial<BigRational>> {
    let src: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    let fail = |reason: &str| Error::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    if src.is_empty() {
        return Err(fail("empty literal"));
    }

    let mut pos = 0;
    let mut acc = Polynomial::<BigRational>::zero();
    while pos < src.len() {
        let negative = match src[pos] {
            '+' | '-' => {
                pos += 1;
                src[pos - 1] == '-'
            }
            _ if pos == 0 => false,
            c => return Err(fail(&format!("expected sign, found `{c}`"))),
        };

        let coeff = match read_digits(&src, &mut pos) {
            Some(num) => {
                if src.get(pos) == Some(&'/') {
                    pos += 1;
                    let den = read_digits(&src, &mut pos).ok_or_else(|| fail("missing denominator"))?;
                    if den.is_zero() {
                        return Err(fail("zero denominator"));
                    }
                    Some(BigRational::new(num, den))
                } else {
                    Some(BigRational::from_integer(num))
                }
            }
            None => None,
        };

        let mut degree = 0usize;
        let has_star = src.get(pos) == Some(&'*');
        if has_star {
            if coeff.is_none() {
                return Err(fail("`*` without a coefficient"));
            }
            pos += 1;
        }
        if src.get(pos) == Some(&'x') {
            pos += 1;
            degree = 1;
            if src.get(pos) == Some(&'^') {
                pos += 1;
                let d = read_digits(&src, &mut pos).ok_or_else(|| fail("missing exponent"))?;
                degree = usize::try_from(d).map_err(|_| fail("exponent too large"))?;
            }
        } else if has_star {
            return Err(fail("expected `x` after `*`"));
        } else if coeff.is_none() {
            return Err(fail("empty term"));
        }

        let mut c = coeff.unwrap_or_else(BigRational::one);
        if negative {
            c = -c;
        }
        acc = acc + Polynomial::monomial(c, degree);

        if let Some(&c) = src.get(pos) {
            if c != '+' && c != '-' {
                return Err(fail(&format!("unexpected `{c}`")));
            }
            if pos + 1 == src.len() {
                return Err(fail("dangling sign"));
            }
        }
    }
    Ok(acc)
}

fn read_digits(src: &[char], pos: &mut usize) -> Option<BigInt> {
    let start = *pos;
    while src.get(*pos).is_some_and(char::is_ascii_digit) {
        *pos += 1;
    }
    if *pos == start {
        return None;
    }
    src[start..*pos].iter().collect::<String>().parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(s: &str) -> String {
        parse_polynomial(s).unwrap().to_string()
    }

    #[test]
    fn accepts_documented_forms() {
        assert_eq!(show("1+x"), "x+1");
        assert_eq!(show("-x"), "-x");
        assert_eq!(show("3/2*x^2-1"), "3/2*x^2-1");
        assert_eq!(show("3/2x^2 - 1"), "3/2*x^2-1");
        assert_eq!(show("-7"), "-7");
        assert_eq!(show("4/6"), "2/3");
        assert_eq!(show("x^2+x-x^2"), "x");
        assert_eq!(show("x-x"), "0");
        assert_eq!(show("+x"), "x");
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "x^", "1/0", "1/", "2*", "*x", "x+", "y", "1x2", "--x", "x^^2"] {
            assert!(parse_polynomial(bad).is_err(), "{bad:?} should not parse");
        }
    }
}
