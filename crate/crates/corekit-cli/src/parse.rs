//! Text forms accepted on the command line: comma-separated parts
//! (`7,5,4,4,2,1,1`), frequency entries with `^` (`1^2,3`), and rationals
//! (`-23`, `-36/7`).

use corekit::classnumbers::ExactRational;
use corekit::{FrequencyForm, Partition};

/// Parses the canonical partition text form. Each comma-separated entry is
/// either a part or `part^multiplicity`. `()` and the empty string denote
/// the empty partition.
pub fn parse_partition(text: &str) -> Result<Partition, String> {
    let text = text.trim();
    if text.is_empty() || text == "()" {
        return Ok(Partition::empty());
    }
    let mut entries = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        let (part, mult) = match token.split_once('^') {
            Some((v, m)) => (parse_u64(v)?, parse_u64(m)?),
            None => (parse_u64(token)?, 1),
        };
        if part == 0 {
            return Err(format!("invalid part `{token}`: parts must be positive"));
        }
        entries.push((part, mult));
    }
    let freq = FrequencyForm::new(entries).map_err(|e| e.to_string())?;
    Ok(freq.to_partition())
}

fn parse_u64(text: &str) -> Result<u64, String> {
    text.trim()
        .parse()
        .map_err(|_| format!("invalid number `{}`", text.trim()))
}

/// Parses `p` or `p/q` as an exact rational.
pub fn parse_rational(text: &str) -> Result<ExactRational, String> {
    let text = text.trim();
    let parse_i64 = |s: &str| -> Result<i64, String> {
        s.trim()
            .parse()
            .map_err(|_| format!("invalid number `{}`", s.trim()))
    };
    match text.split_once('/') {
        Some((num, den)) => {
            let den = parse_i64(den)?;
            if den == 0 {
                return Err("zero denominator".into());
            }
            Ok(ExactRational::new(parse_i64(num)?, den))
        }
        None => Ok(ExactRational::from_integer(parse_i64(text)?)),
    }
}
