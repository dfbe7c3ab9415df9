use crate::error::{Error, Result};

/// Partition of `N` consecutive physical OAM values, starting at `base`, into
/// `N / d` logical sets of size `d`. OAM `base + k` encodes logical value
/// `(k mod d) + 1`, so `base`, `base + d`, `base + 2d`, ... all encode `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LogicalEncoding {
    n_modes: usize,
    d: usize,
    base: i32,
}

impl LogicalEncoding {
    pub fn new(n_modes: usize, d: usize, base: i32) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidDimension(d));
        }
        if n_modes == 0 || !n_modes.is_multiple_of(d) {
            return Err(Error::InvalidInput(format!(
                "number of physical modes {n_modes} must be a positive multiple of d = {d}"
            )));
        }
        Ok(Self { n_modes, d, base })
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn base(&self) -> i32 {
        self.base
    }

    pub fn sets(&self) -> usize {
        self.n_modes / self.d
    }

    fn offset(&self, l: i32) -> Result<usize> {
        let hi = self.base + self.n_modes as i32;
        if l < self.base || l >= hi {
            return Err(Error::OutOfRange {
                l,
                lo: self.base,
                hi,
            });
        }
        Ok((l - self.base) as usize)
    }

    /// Logical value in `1..=d` carried by physical OAM `l`.
    pub fn logical_value(&self, l: i32) -> Result<usize> {
        Ok(self.offset(l)? % self.d + 1)
    }

    /// 1-based index of the logical set containing `l`.
    pub fn set_index(&self, l: i32) -> Result<usize> {
        Ok(self.offset(l)? / self.d + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_labels() {
        let enc = LogicalEncoding::new(9, 3, 1).unwrap();
        assert_eq!(enc.logical_value(1).unwrap(), 1);
        assert_eq!(enc.logical_value(4).unwrap(), 1);
        assert_eq!(enc.logical_value(7).unwrap(), 1);
        assert_eq!(enc.logical_value(3).unwrap(), 3);
        assert_eq!(enc.logical_value(6).unwrap(), 3);
        assert_eq!(enc.logical_value(9).unwrap(), 3);
        assert_eq!(enc.set_index(5).unwrap(), 2);
        assert_eq!(enc.sets(), 3);
    }

    #[test]
    fn base_offsets() {
        let enc = LogicalEncoding::new(8, 4, 4).unwrap();
        assert_eq!(enc.logical_value(4).unwrap(), 1);
        assert_eq!(enc.logical_value(8).unwrap(), 1);
        assert_eq!(enc.logical_value(11).unwrap(), 4);
    }

    #[test]
    fn rejects_bad_layouts() {
        assert!(LogicalEncoding::new(7, 3, 1).is_err());
        assert!(LogicalEncoding::new(0, 3, 1).is_err());
        assert!(matches!(
            LogicalEncoding::new(4, 1, 1),
            Err(Error::InvalidDimension(1))
        ));
        let enc = LogicalEncoding::new(6, 2, 1).unwrap();
        assert!(matches!(
            enc.logical_value(0),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            enc.logical_value(7),
            Err(Error::OutOfRange { .. })
        ));
    }
}
