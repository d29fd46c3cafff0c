use std::str::FromStr;

/// `a..b` with both ends included, or a single value `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InclusiveRange {
    pub lo: usize,
    pub hi: usize,
}

impl InclusiveRange {
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

impl FromStr for InclusiveRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{t}` is not a non-negative integer"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(InclusiveRange { lo, hi })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        assert_eq!("2..6".parse(), Ok(InclusiveRange { lo: 2, hi: 6 }));
        assert_eq!("2..=6".parse(), Ok(InclusiveRange { lo: 2, hi: 6 }));
        assert_eq!("4".parse(), Ok(InclusiveRange { lo: 4, hi: 4 }));
        assert!("6..2".parse::<InclusiveRange>().is_err());
        assert!("x..2".parse::<InclusiveRange>().is_err());
        assert_eq!("0..3".parse::<InclusiveRange>().unwrap().iter().count(), 4);
    }
}
