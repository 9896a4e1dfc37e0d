//! Text formats: comma-separated free type vectors on input and the
//! `(q;w_1,...,w_n)` tuple on output.

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("component {position} is empty")]
    EmptyComponent { position: usize },
    #[error("component {position} ({text:?}) is not an integer")]
    NotAnInteger { position: usize, text: String },
    #[error("tuple must look like (q;w1,...,wn)")]
    MalformedTuple,
}

/// Parses `"3,1,2,2"` into its integer components. Signs are accepted here
/// so that validation can report non-positive components precisely.
pub fn parse_repr(text: &str) -> Result<Vec<i64>, ParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseError::Empty);
    }
    text.split(',')
        .enumerate()
        .map(|(i, part)| {
            let part = part.trim();
            if part.is_empty() {
                return Err(ParseError::EmptyComponent { position: i + 1 });
            }
            part.parse().map_err(|_| ParseError::NotAnInteger {
                position: i + 1,
                text: part.to_string(),
            })
        })
        .collect()
}

pub fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// `(q;w_1,...,w_n)`
pub fn format_tuple(quota: &BigUint, weights: &[BigUint]) -> String {
    format!("({};{})", quota, join(weights, ","))
}

pub fn parse_tuple(text: &str) -> Result<(BigUint, Vec<BigUint>), ParseError> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or(ParseError::MalformedTuple)?;
    let (quota, weights) = inner.split_once(';').ok_or(ParseError::MalformedTuple)?;
    let number = |s: &str| {
        s.trim()
            .parse::<BigUint>()
            .map_err(|_| ParseError::MalformedTuple)
    };
    let quota = number(quota)?;
    let weights = weights
        .split(',')
        .map(number)
        .collect::<Result<Vec<_>, _>>()?;
    Ok((quota, weights))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_representations() {
        assert_eq!(parse_repr("3,1,2,2"), Ok(vec![3, 1, 2, 2]));
        assert_eq!(parse_repr(" 3 "), Ok(vec![3]));
        assert_eq!(parse_repr("2,-1,2"), Ok(vec![2, -1, 2]));
        assert_eq!(
            parse_repr("2,"),
            Err(ParseError::EmptyComponent { position: 2 })
        );
        assert_eq!(parse_repr(""), Err(ParseError::Empty));
        assert!(matches!(
            parse_repr("2,x"),
            Err(ParseError::NotAnInteger { position: 2, .. })
        ));
        assert!(parse_repr("99999999999999999999").is_err());
    }

    #[test]
    fn tuple_roundtrip() {
        let weights: Vec<BigUint> = [1u32, 1, 1, 2].iter().map(|&w| w.into()).collect();
        let text = format_tuple(&BigUint::from(3u32), &weights);
        assert_eq!(text, "(3;1,1,1,2)");
        assert_eq!(parse_tuple(&text), Ok((BigUint::from(3u32), weights)));
        assert_eq!(parse_tuple("3;1,2"), Err(ParseError::MalformedTuple));
        assert_eq!(parse_tuple("(3,1,2)"), Err(ParseError::MalformedTuple));
    }
}
