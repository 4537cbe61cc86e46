//! Parsing of series literals given on the command line.
//!
//! Two forms are accepted: a comma-separated list of rational coefficients
//! ("0,1,-1" means x − x²), and a small closed-form grammar covering
//! (1±cx)^(a/b), x/(1±cx) and -x/(1±cx).

use regex::Regex;
use seqkit_core::rational::{parse_rat, Rat};
use seqkit_core::series::{binomial_series, x_over_one_minus};
use seqkit_core::PowerSeries;

use num::One;

pub fn parse_series(input: &str, order: usize) -> Result<PowerSeries, String> {
    let input = input.trim();
    if let Some(ps) = try_parse_binomial(input, order)? {
        return Ok(ps);
    }
    if let Some(ps) = try_parse_x_over(input, order)? {
        return Ok(ps);
    }
    parse_coeff_list(input, order)
}

/// `(1±cx)^(a/b)` — exponent parentheses optional for integer exponents.
fn try_parse_binomial(input: &str, order: usize) -> Result<Option<PowerSeries>, String> {
    let re = Regex::new(
        r"^\(\s*1\s*([+-])\s*(\d+(?:/\d+)?)\s*\*?\s*x\s*\)\s*\^\s*\(?\s*(-?\d+(?:/\d+)?)\s*\)?$",
    )
    .unwrap();
    let Some(caps) = re.captures(input) else {
        return Ok(None);
    };
    let mut c = parse_rat(&caps[2]).ok_or_else(|| format!("bad coefficient in {input:?}"))?;
    if &caps[1] == "-" {
        c = -c;
    }
    let alpha = parse_rat(&caps[3]).ok_or_else(|| format!("bad exponent in {input:?}"))?;
    Ok(Some(binomial_series(&alpha, &c, order)))
}

/// `x/(1±cx)` or `-x/(1±cx)`.
fn try_parse_x_over(input: &str, order: usize) -> Result<Option<PowerSeries>, String> {
    let re =
        Regex::new(r"^(-?)\s*x\s*/\s*\(\s*1\s*([+-])\s*(\d+(?:/\d+)?)\s*\*?\s*x\s*\)$").unwrap();
    let Some(caps) = re.captures(input) else {
        return Ok(None);
    };
    let s = if &caps[1] == "-" { -Rat::one() } else { Rat::one() };
    let mut c = parse_rat(&caps[3]).ok_or_else(|| format!("bad coefficient in {input:?}"))?;
    if &caps[2] == "+" {
        c = -c;
    }
    Ok(Some(x_over_one_minus(&s, &c, order)))
}

fn parse_coeff_list(input: &str, order: usize) -> Result<PowerSeries, String> {
    let coeffs: Vec<Rat> = input
        .split(',')
        .map(|tok| parse_rat(tok).ok_or_else(|| format!("bad rational {:?}", tok.trim())))
        .collect::<Result<_, _>>()?;
    if coeffs.is_empty() {
        return Err("empty coefficient list".into());
    }
    Ok(PowerSeries::from_poly(&coeffs, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use seqkit_core::rational::rat;

    #[test]
    fn coeff_list() {
        let ps = parse_series("0,1,-1", 4).unwrap();
        assert_eq!(ps.coeff(1), &rat(1));
        assert_eq!(ps.coeff(2), &rat(-1));
        assert_eq!(ps.coeff(4), &rat(0));
        assert_eq!(
            parse_series("1/2, -3/4", 2).unwrap().coeff(1),
            &(-parse_rat("3/4").unwrap())
        );
    }

    #[test]
    fn binomial_form() {
        // (1-9x)^(-1/3): coefficients 1, 3, 18, ...
        let ps = parse_series("(1-9x)^(-1/3)", 3).unwrap();
        assert_eq!(ps.coeff(0), &rat(1));
        assert_eq!(ps.coeff(1), &rat(3));
        assert_eq!(ps.coeff(2), &rat(18));
        // integer exponent without parentheses
        let sq = parse_series("(1+2x)^2", 3).unwrap();
        assert_eq!(sq.coeff(1), &rat(4));
        assert_eq!(sq.coeff(2), &rat(4));
        assert_eq!(sq.coeff(3), &rat(0));
    }

    #[test]
    fn x_over_forms() {
        let ps = parse_series("-x/(1-9x)", 3).unwrap();
        assert_eq!(ps.coeff(0), &rat(0));
        assert_eq!(ps.coeff(1), &rat(-1));
        assert_eq!(ps.coeff(2), &rat(-9));
        assert_eq!(ps.coeff(3), &rat(-81));
        let plus = parse_series("x/(1+4x)", 2).unwrap();
        assert_eq!(plus.coeff(2), &rat(-4));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_series("x^2 + sin(x)", 4).is_err());
        assert!(parse_series("", 4).is_err());
    }
}
