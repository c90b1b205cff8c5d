//! Named families shared by the unit tests.

use crate::boolean::SupportFamily;

/// Nine elements on four rows; rows are `{1..5}`, `{3..6}`, `{5..8}`, `{6..9}`.
pub fn staircase9() -> SupportFamily {
    SupportFamily::from_lists(&[&[1], &[1], &[1, 2], &[1, 2], &[1, 2, 3], &[2, 3, 4], &[3, 4], &[3, 4], &[4]])
        .unwrap()
}

/// Three lines pairwise spanning a plane.
pub fn coplanar_lines() -> SupportFamily {
    SupportFamily::from_lists(&[&[1, 2], &[2, 3], &[1, 3]]).unwrap()
}
