use super::LedgerError;

/// Dimension of the symmetric space, virtual cohomological dimension and
/// cuspidal degree range for subgroups of SL_n(ℤ).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeTable {
    pub n: usize,
    pub dim_x: usize,
    pub vcd: usize,
    pub cusp_top: Option<usize>,
    pub cusp_bottom: Option<usize>,
}

// (top, bottom) for n = 2..=9
const CUSP_RANGE: [(usize, usize); 8] = [(1, 1), (3, 2), (5, 4), (8, 6), (11, 9), (15, 12), (19, 16), (24, 20)];

/// Computed fields for any n >= 2; the cuspidal range is tabulated only up to n = 9.
pub fn range_table(n: usize) -> Result<RangeTable, LedgerError> {
    if n < 2 {
        return Err(LedgerError::InvalidRank { n });
    }
    let dim_x = n * (n + 1) / 2 - 1;
    let vcd = dim_x - (n - 1);
    let mut table = RangeTable { n, dim_x, vcd, cusp_top: None, cusp_bottom: None };
    match CUSP_RANGE.get(n - 2) {
        Some(&(top, bottom)) => {
            table.cusp_top = Some(top);
            table.cusp_bottom = Some(bottom);
            Ok(table)
        }
        None => Err(LedgerError::CuspRangeUnknown { partial: table }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tabulated_columns() {
        let t = range_table(4).unwrap();
        assert_eq!((t.dim_x, t.vcd, t.cusp_top, t.cusp_bottom), (9, 6, Some(5), Some(4)));
        let t = range_table(2).unwrap();
        assert_eq!((t.dim_x, t.vcd, t.cusp_top, t.cusp_bottom), (2, 1, Some(1), Some(1)));
        let t = range_table(9).unwrap();
        assert_eq!((t.vcd, t.cusp_bottom, t.cusp_top), (36, Some(20), Some(24)));
        for n in 2..=9 {
            let t = range_table(n).unwrap();
            assert!(t.cusp_bottom <= t.cusp_top && t.cusp_top <= Some(t.vcd));
        }
    }

    #[test]
    fn beyond_the_table() {
        match range_table(10) {
            Err(LedgerError::CuspRangeUnknown { partial }) => {
                assert_eq!((partial.dim_x, partial.vcd), (54, 45));
                assert_eq!(partial.cusp_top, None);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(range_table(1), Err(LedgerError::InvalidRank { n: 1 }));
    }
}
