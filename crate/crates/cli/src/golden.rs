//! Reference datasets for regression: every row re-derivable by the
//! library, and re-verified cell by cell in the test suite.

/// (lambda, x, y, n numerator, n denominator, exclusion marker)
pub type OverlapRow = (i64, i64, i64, i64, i64, u8);

pub const MARK_NONE: u8 = 0;
pub const MARK_N_ZERO: u8 = 1;
pub const MARK_N_CRITICAL: u8 = 2;

/// Complete overlap rows for every nonzero m in [-10, 5].
pub const ENUMERATION_BLOCKS: &[(i64, &[OverlapRow])] = &[
    (
        -10,
        &[
            (1, 1, 0, -10, 1, 0),
            (-1, -1, 1, -106480, 1, 0),
            (-5, -5, 1, -400, 1, 0),
            (169, -11, 1, -640, 13, 0),
            (-169, -9, 2, -270, 13, 0),
            (338, 2, 1, -160, 13, 0),
            (-845, -125, 9, -90792400, 13, 0),
            (-845, -5, 4, -6250, 13, 0),
            (1690, -20, 3, -100, 13, 0),
        ],
    ),
    (
        -9,
        &[
            (1, 1, 0, -9, 1, 0),
            (1, -5, 1, -3087, 1, 0),
            (27, -6, 1, -9, 1, 0),
            (-27, -3, 1, -9, 1, 0),
            (-27, -12, 1, -3087, 1, 0),
            (-27, -3, 2, -3087, 1, 0),
            (81, 0, 1, -27, 1, 0),
            (81, -9, 1, -27, 1, 0),
            (-81, -9, 2, -27, 1, 0),
        ],
    ),
    (
        -8,
        &[
            (1, 1, 0, -8, 1, 0),
            (-8, -4, 1, -8, 1, 0),
            (16, -6, 1, -27, 4, 2),
            (25, -7, 1, -64, 5, 0),
            (-25, -9, 2, -216, 5, 0),
            (200, -16, 3, -64, 5, 0),
            (-200, -12, 1, -216, 5, 0),
            (400, -26, 3, -6859, 20, 0),
            (400, -34, 7, -6859, 20, 0),
        ],
    ),
    (
        -7,
        &[
            (1, 1, 0, -7, 1, 0),
            (1, -3, 1, -189, 1, 0),
            (1, -5, 1, -7, 1, 0),
            (1, -6, 1, -189, 1, 0),
            (1, -41, 9, -1588867, 1, 0),
            (-1, -4, 1, -7, 1, 0),
            (-1, -9, 2, -189, 1, 0),
            (-1, -25, 4, -1588867, 1, 0),
            (-1, -16, 5, -1588867, 1, 0),
            (7, -14, 3, -49, 1, 0),
            (-7, -7, 1, -49, 1, 0),
            (-7, -7, 2, -49, 1, 0),
        ],
    ),
    (
        -6,
        &[
            (1, 1, 0, -6, 1, 0),
            (-1, -13, 3, 48000, 1, 0),
            (2, -4, 1, 12, 1, 0),
            (9, -3, 1, 0, 1, 1),
            (-9, -9, 2, 54, 1, 0),
            (-18, -6, 1, 0, 1, 1),
        ],
    ),
    (
        -5,
        &[
            (1, 1, 0, -5, 1, 0),
            (1, -4, 1, 625, 1, 0),
            (49, -1, 1, -5, 7, 0),
            (-49, -9, 2, 135, 7, 0),
            (245, -10, 3, 25, 7, 0),
        ],
    ),
    (
        -4,
        &[
            (1, 1, 0, -4, 1, 0),
            (-4, -4, 1, 128, 1, 0),
            (121, 1, 1, -32, 11, 0),
            (-121, -9, 2, 108, 11, 0),
            (484, -8, 3, 16, 11, 0),
            (484, -26, 7, 9826, 11, 0),
            (-484, -10, 1, -2, 11, 0),
            (-484, -1384, 365, 206613902738896, 11, 0),
        ],
    ),
    (
        -3,
        &[
            (1, 1, 0, -3, 1, 0),
            (9, -3, 1, 27, 1, 0),
            (25, -2, 1, 3, 5, 0),
            (225, 3, 1, -27, 5, 0),
            (225, -24, 7, 35937, 5, 0),
            (-225, -9, 2, 27, 5, 0),
        ],
    ),
    (
        -2,
        &[
            (1, 1, 0, -2, 1, 0),
            (1, -3, 1, 3456, 1, 0),
            (361, 5, 1, -128, 19, 0),
            (361, -259, 85, 196710433792, 19, 0),
            (-361, -9, 2, 54, 19, 0),
            (722, -4, 3, 4, 19, 0),
            (-722, -22, 7, 16384, 19, 0),
        ],
    ),
    (
        -1,
        &[
            (1, 1, 0, -1, 1, 0),
            (529, 7, 1, -125, 23, 0),
            (529, -2, 3, 1, 23, 0),
            (529, -11, 5, 2197, 23, 0),
            (-529, -9, 2, 27, 23, 0),
            (-529, -42, 17, 4492125, 23, 0),
        ],
    ),
    (
        1,
        &[
            (1, 1, 0, 1, 1, 0),
            (1, 5, 1, 300763, 1, 0),
            (961, 11, 1, 343, 31, 0),
            (-961, -9, 2, -27, 31, 0),
            (-961, 2, 3, 1, 31, 0),
            (-961, 24, 5, 132651, 31, 0),
        ],
    ),
    (
        2,
        &[
            (1, 1, 0, 2, 1, 0),
            (-1, 15, 2, 208974222, 1, 0),
            (-49, -1, 1, -16, 7, 0),
            (50, 8, 1, 8788, 5, 0),
            (-50, -2, 1, -32, 5, 0),
            (-98, 6, 1, 864, 7, 0),
            (1225, 13, 1, 1024, 35, 0),
            (-1225, -9, 2, -54, 35, 0),
            (-2450, 4, 3, 4, 35, 0),
        ],
    ),
    (
        3,
        &[
            (1, 1, 0, 3, 1, 0),
            (169, 49, 5, 114818259, 13, 0),
            (-169, 2, 1, 3, 13, 0),
            (1521, 15, 1, 729, 13, 0),
            (-1521, -9, 2, -27, 13, 0),
        ],
    ),
    (
        4,
        &[
            (1, 1, 0, 4, 1, 0),
            (4, 12, 1, 3456000, 1, 0),
            (1849, 17, 1, 4000, 43, 0),
            (-1849, -9, 2, -108, 43, 0),
            (-7396, 8, 3, 16, 43, 0),
        ],
    ),
    (
        5,
        &[
            (1, 1, 0, 5, 1, 0),
            (2209, 19, 1, 6655, 47, 0),
            (-2209, -9, 2, -135, 47, 0),
            (-11045, 10, 3, 25, 47, 0),
        ],
    ),
];

/// (m, n, x, y, lambda, x2, y2, lambda2): one row per matched
/// solution pair across the two orientations of an overlap.
pub type PairRow = (i64, i64, i64, i64, i64, i64, i64, i64);

/// Overlaps with totally imaginary splitting field:
/// -6 <= m < n <= 200000 under the square condition.
pub const IMAGINARY_RANGE_ROWS: &[PairRow] = &[
    (-6, 12, -4, 1, 2, -2, 1, -500),
    (-6, 54, -9, 2, -9, -9, 2, -59049),
    (-6, 48000, -13, 3, -1, -140, 3, -129554216000),
    (-5, 625, -4, 1, 1, 5, 1, -857375),
    (-4, 128, -4, 1, -4, -8, 1, -43904),
    (-3, 27, -3, 1, 9, 0, 1, -2187),
    (-2, 3456, -3, 1, 1, 36, 1, -34012224),
    (12, 54, 18, 1, -4500, 36, 1, -118098),
    (12, 48000, 28, 1, -500, 1640, 1, -259108432000),
    (54, 48000, 117, 1, 59049, -3420, 1, -1165987944000),
];

/// Overlaps with totally real splitting field:
/// -200000 <= n < m <= -7 under the square condition.
pub const REAL_RANGE_ROWS: &[PairRow] = &[
    (-7, -49, -7, 1, -7, 28, 1, 107653),
    (-7, -49, -7, 2, -7, -35, 2, 107653),
    (-7, -49, -14, 3, 7, -7, 3, -107653),
    (-7, -189, -3, 1, 1, 36, 1, 531441),
    (-7, -189, -6, 1, 1, -45, 1, 531441),
    (-7, -189, -9, 2, -1, -9, 2, -531441),
    (-9, -27, 0, 1, 81, 9, 1, 6561),
    (-9, -27, -9, 1, 81, -18, 1, 6561),
    (-9, -27, -9, 2, -81, -9, 2, -6561),
    (-9, -3087, -5, 1, 1, 14, 1, -17373979),
    (-9, -3087, -12, 1, -27, 273, 1, 469097433),
    (-9, -3087, -3, 2, -27, -231, 2, 469097433),
    (-10, -400, -5, 1, -5, -10, 1, -266200),
    (-10, -106480, -1, 1, -1, -638, 1, 63139882168),
    (-12, -54, -6, 1, 36, 0, 1, -4374),
    (-12, -432, 0, 1, 36, 36, 1, 944784),
    (-12, -71874, -18, 1, 36, -1584, 1, 345342998286),
    (-13, -4563, 0, 1, 13, 117, 1, 89813529),
    (-13, -4563, -39, 2, 1625, -819, 2, 11226691125),
    (-13, -4563, -39, 7, -1625, -234, 7, -11226691125),
    (-14, -5292, 0, 1, -14, -126, 1, 104162436),
    (-15, -675, 0, 1, -45, -45, 1, 1476225),
    (-15, -3645, -6, 1, 9, 27, 1, -20253807),
    (-16, -6750, -6, 1, -8, -45, 1, -66430125),
    (-18, -108, 0, 1, -162, -18, 1, 26244),
    (-18, -288, -6, 1, -54, -12, 1, -108000),
    (-27, -3087, -45, 1, 6561, -504, 1, 1407292299),
    (-27, -3087, 9, 4, 6561, 315, 4, 1407292299),
    (-27, -3087, -36, 5, -6561, -189, 5, -1407292299),
    (-36, -147456, 3, 1, 27, 528, 1, 39582093312),
    (-38, -8208, 3, 1, -125, -126, 1, 114791256),
    (-45, -16875, -9, 1, 81, 90, 1, -281302875),
    (-49, -189, -63, 1, 107653, -126, 1, 3720087),
    (-49, -189, -42, 5, -107653, -63, 5, -3720087),
    (-49, -189, 21, 4, 107653, 63, 4, 3720087),
    (-54, -71874, 9, 2, 729, 693, 2, 57557166381),
    (-54, -432, -9, 1, -729, -18, 1, -157464),
    (-68, -918, 6, 1, 1372, 36, 1, 1062882),
    (-88, -2376, -12, 1, 1000, 36, 1, -4251528),
    (-96, -39366, -12, 1, -288, -162, 1, -1093705578),
    (-108, -288, 9, 1, 6561, 18, 1, 81000),
    (-135, -46305, 9, 1, 729, 252, 1, 1715072373),
    (-270, -1440, -18, 1, -13122, -36, 1, -889056),
    (-363, -4125, -22, 1, 15125, 55, 1, -6755375),
    (-368, -1058, 46, 3, -903992, -115, 3, 12901781),
    (-400, -106480, 35, 2, 33275, 715, 2, 39462426355),
    (-432, -71874, 18, 1, -5832, -297, 1, 2131746903),
    (-675, -3645, 45, 2, -492075, -135, 2, 33756345),
    (-1404, -4992, 36, 1, 236196, 72, 1, 5659776),
    (-1890, -8400, -45, 1, -295245, -90, 1, -12346200),
    (-2784, -45414, 348, 7, -101618784, -1566, 7, 109587206394),
    (-4913, -103823, 68, 1, 614125, 329, 1, 1263214441),
    (-14040, -54080, 117, 1, 6908733, 234, 1, 201281704),
    (-15498, -64288, -126, 1, -7440174, -252, 1, -260876000),
];

/// The seventeen integer pairs (m, n), n != m, with coinciding
/// splitting fields for -10 <= m <= 5.
pub const INTEGER_PAIRS_SMALL_RANGE: &[(i64, i64)] = &[
    (-10, -106480),
    (-10, -400),
    (-9, -3087),
    (-9, -27),
    (-7, -1588867),
    (-7, -189),
    (-7, -49),
    (-6, 12),
    (-6, 54),
    (-6, 48000),
    (-5, 625),
    (-4, 128),
    (-3, 27),
    (-2, 3456),
    (1, 300763),
    (2, 208974222),
    (4, 3456000),
];
