//! Ingested data files: Gritsenko dimensions `p,dim_gritsenko` and SL₃
//! eigenvalues `level,prime,gamma,gamma_prime`. Lines starting with `#` are
//! comments; a header row naming the columns is optional.

use std::collections::BTreeMap;

use hecke_core::arith::is_prime;
use hecke_core::heckepoly::Sl3Datum;
use hecke_core::paramodular::complement_dims;

use super::{parse_rational, FormatError};

fn records(text: &str, header: &[&str]) -> Result<Vec<(usize, csv::StringRecord)>, FormatError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut out = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec?;
        let line = rec.position().map_or(i + 1, |p| p.line() as usize);
        if rec.len() != header.len() {
            return Err(FormatError::Line { line, message: format!("expected {} fields, found {}", header.len(), rec.len()) });
        }
        if out.is_empty() && i == 0 && rec.iter().eq(header.iter().copied()) {
            continue;
        }
        out.push((line, rec));
    }
    Ok(out)
}

fn integer(rec: &csv::StringRecord, idx: usize, line: usize) -> Result<u64, FormatError> {
    rec[idx].parse().map_err(|_| FormatError::Line { line, message: format!("not a nonnegative integer: {:?}", &rec[idx]) })
}

/// Map p → dim S³_G(p). Each p must be prime, appear once and satisfy dim_G <= dim S³(p).
pub fn parse_gritsenko(text: &str) -> Result<BTreeMap<u64, u64>, FormatError> {
    let mut out = BTreeMap::new();
    for (line, rec) in records(text, &["p", "dim_gritsenko"])? {
        let p = integer(&rec, 0, line)?;
        let g = integer(&rec, 1, line)?;
        let bad = |message: String| FormatError::Line { line, message };
        if !is_prime(p) {
            return Err(bad(format!("{p} is not prime")));
        }
        complement_dims(p, Some(g)).map_err(|e| bad(e.to_string()))?;
        if out.insert(p, g).is_some() {
            return Err(bad(format!("p = {p} listed twice")));
        }
    }
    Ok(out)
}

/// SL₃ classes in file order. Rows for one class are consecutive; a class ends
/// when the level changes or a prime repeats.
pub fn parse_sl3(text: &str) -> Result<Vec<Sl3Datum>, FormatError> {
    let mut out: Vec<Sl3Datum> = Vec::new();
    for (line, rec) in records(text, &["level", "prime", "gamma", "gamma_prime"])? {
        let level = integer(&rec, 0, line)?;
        let l = integer(&rec, 1, line)?;
        let bad = |message: String| FormatError::Line { line, message };
        if level == 0 {
            return Err(bad("level must be positive".into()));
        }
        if !is_prime(l) || level % l == 0 {
            return Err(bad(format!("{l} is not a prime coprime to the level {level}")));
        }
        let gamma = parse_rational(&rec[2]).map_err(|e| bad(e.to_string()))?;
        let gamma_prime = parse_rational(&rec[3]).map_err(|e| bad(e.to_string()))?;
        let start_new = match out.last() {
            Some(d) => d.level != level || d.eigenvalues.contains_key(&l),
            None => true,
        };
        if start_new {
            out.push(Sl3Datum { level, eigenvalues: BTreeMap::new() });
        }
        out.last_mut().expect("pushed above").eigenvalues.insert(l, (gamma, gamma_prime));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hecke_core::Rational;

    #[test]
    fn gritsenko_file() {
        let text = "# dims\np,dim_gritsenko\n2,0\n 13 , 1\n";
        let map = parse_gritsenko(text).unwrap();
        assert_eq!(map, [(2, 0), (13, 1)].into_iter().collect());
        assert!(parse_gritsenko("4,0\n").is_err());
        assert!(parse_gritsenko("13,2\n").is_err());
        assert!(parse_gritsenko("13,1\n13,1\n").is_err());
        assert!(parse_gritsenko("13\n").is_err());
    }

    #[test]
    fn sl3_file() {
        let text = "level,prime,gamma,gamma_prime\n53,2,1/2,-1\n53,3,0,0\n53,2,4,4\n61,2,1,1\n";
        let data = parse_sl3(text).unwrap();
        assert_eq!(data.len(), 3);
        assert_eq!(data[0].eigenvalues[&2], (Rational::new(1, 2), Rational::from_integer(-1)));
        assert_eq!(data[0].eigenvalues.len(), 2);
        assert_eq!((data[1].level, data[2].level), (53, 61));
        assert!(parse_sl3("53,53,0,0\n").is_err());
        assert!(parse_sl3("53,2,1/0,0\n").is_err());
    }
}
