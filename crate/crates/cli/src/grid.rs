//! Parsers for argument lists, inclusive ranges and explicit tuple grids.

use thiserror::Error;

/// Upper bound on the number of points a single range may expand to.
pub const MAX_RANGE_POINTS: usize = 100_000;

#[derive(Debug, Error, PartialEq)]
pub enum GridError {
    #[error("empty specification")]
    Empty,
    #[error("not a finite number: {0:?}")]
    Number(String),
    #[error("range {0:?}: expected start:stop:step")]
    Shape(String),
    #[error("range {0:?}: step must be positive and stop >= start")]
    Direction(String),
    #[error("range {0:?} expands to more than {MAX_RANGE_POINTS} points")]
    TooLarge(String),
}

fn number(token: &str) -> Result<f64, GridError> {
    let t = token.trim();
    match t.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(GridError::Number(t.to_string())),
    }
}

/// Comma-separated reals, e.g. `2,2.5`.
pub fn parse_list(spec: &str) -> Result<Vec<f64>, GridError> {
    if spec.trim().is_empty() {
        return Err(GridError::Empty);
    }
    spec.split(',').map(number).collect()
}

/// `start:stop:step` with inclusive endpoints (within a small relative slack), or a comma list.
pub fn parse_range(spec: &str) -> Result<Vec<f64>, GridError> {
    if !spec.contains(':') {
        return parse_list(spec);
    }
    let parts: Vec<&str> = spec.split(':').collect();
    let [start, stop, step] = parts[..] else {
        return Err(GridError::Shape(spec.to_string()));
    };
    let (start, stop, step) = (number(start)?, number(stop)?, number(step)?);
    if !(step > 0.0 && stop >= start) {
        return Err(GridError::Direction(spec.to_string()));
    }
    let span = (stop - start) / step;
    if span.is_nan() || span >= MAX_RANGE_POINTS as f64 {
        return Err(GridError::TooLarge(spec.to_string()));
    }
    let count = (span + 1e-9 * span.max(1.0)).floor() as usize + 1;
    Ok((0..count).map(|i| start + i as f64 * step).collect())
}

/// `;`-separated tuples of comma-separated reals, e.g. `2,2,2;2,3,2`.
pub fn parse_tuples(spec: &str) -> Result<Vec<Vec<f64>>, GridError> {
    if spec.trim().is_empty() {
        return Err(GridError::Empty);
    }
    spec.split(';').map(parse_list).collect()
}

/// Cartesian product in row-major order (last axis fastest).
pub fn cartesian(axes: &[Vec<f64>]) -> Vec<Vec<f64>> {
    axes.iter().fold(vec![Vec::new()], |acc, axis| {
        acc.iter()
            .flat_map(|prefix| {
                axis.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inclusive_ranges() {
        assert_eq!(
            parse_range("1:3:0.5").unwrap(),
            vec![1.0, 1.5, 2.0, 2.5, 3.0]
        );
        assert_eq!(parse_range("1.5:6:0.5").unwrap().len(), 10);
        assert_eq!(parse_range("0:0.3:0.1").unwrap().len(), 4);
        assert_eq!(parse_range("2:2:1").unwrap(), vec![2.0]);
        assert_eq!(parse_range("1,2,4").unwrap(), vec![1.0, 2.0, 4.0]);
        assert_eq!(parse_range("3").unwrap(), vec![3.0]);
    }

    #[test]
    fn range_errors() {
        assert_eq!(parse_range(""), Err(GridError::Empty));
        assert!(matches!(parse_range("1:2"), Err(GridError::Shape(_))));
        assert!(matches!(parse_range("1:2:3:4"), Err(GridError::Shape(_))));
        assert!(matches!(parse_range("3:1:1"), Err(GridError::Direction(_))));
        assert!(matches!(parse_range("1:2:0"), Err(GridError::Direction(_))));
        assert!(matches!(
            parse_range("1:2:-1"),
            Err(GridError::Direction(_))
        ));
        assert!(matches!(
            parse_range("0:1e300:1e-300"),
            Err(GridError::TooLarge(_))
        ));
        assert!(matches!(parse_range("a:2:1"), Err(GridError::Number(_))));
        assert!(matches!(parse_range("1:inf:1"), Err(GridError::Number(_))));
        assert!(matches!(parse_range("nan"), Err(GridError::Number(_))));
    }

    #[test]
    fn tuples() {
        assert_eq!(
            parse_tuples("2,2,2;2,3,2").unwrap(),
            vec![vec![2.0, 2.0, 2.0], vec![2.0, 3.0, 2.0]]
        );
        assert!(parse_tuples("2,2;").is_err());
        assert!(parse_tuples("2,,2").is_err());
    }

    #[test]
    fn product_order() {
        let p = cartesian(&[vec![1.0, 2.0], vec![3.0, 4.0]]);
        assert_eq!(
            p,
            vec![
                vec![1.0, 3.0],
                vec![1.0, 4.0],
                vec![2.0, 3.0],
                vec![2.0, 4.0]
            ]
        );
        assert_eq!(cartesian(&[]), vec![Vec::<f64>::new()]);
    }
}
