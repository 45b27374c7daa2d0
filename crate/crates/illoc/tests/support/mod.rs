#![allow(dead_code)]

pub mod gen;
pub mod oracle;

use illoc_core::MbMode;

/// Tautology statuses of (10)-(14) over admissible valuations, as computed
/// by the reference oracle: `(k, mode, [10, 11, 12, 13, 14])`.
pub const FROZEN_STATUS: [(u32, MbMode, [bool; 5]); 6] = [
    (1, MbMode::Free, [true, true, false, false, false]),
    (1, MbMode::Pointwise, [true, true, true, true, true]),
    (1, MbMode::Connective, [true, true, true, true, true]),
    (2, MbMode::Free, [true, true, false, false, false]),
    (2, MbMode::Pointwise, [true, true, true, true, false]),
    (2, MbMode::Connective, [true, true, true, true, true]),
];
