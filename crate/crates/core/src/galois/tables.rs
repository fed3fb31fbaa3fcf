//! Cycle-type statistics of the transitive permutation groups of degree
//! 2 to 7.

/// One transitive group: `classes` maps a cycle type (descending part sizes)
/// to the number of elements with that type.
#[derive(Debug)]
pub(super) struct GroupData {
    pub degree: usize,
    pub name: &'static str,
    pub order: u64,
    pub classes: &'static [(&'static [u8], u64)],
}

// Generated by enumerating each group from the generators listed in
// tests/galois_tables.rs, which regenerates and compares these counts.

pub(super) static GROUPS: &[GroupData] = &[
    GroupData { degree: 2, name: "C2", order: 2, classes: &[(&[1, 1], 1), (&[2], 1)] },
    GroupData { degree: 3, name: "C3", order: 3, classes: &[(&[1, 1, 1], 1), (&[3], 2)] },
    GroupData { degree: 3, name: "S3", order: 6, classes: &[(&[1, 1, 1], 1), (&[2, 1], 3), (&[3], 2)] },
    GroupData { degree: 4, name: "C4", order: 4, classes: &[(&[1, 1, 1, 1], 1), (&[2, 2], 1), (&[4], 2)] },
    GroupData { degree: 4, name: "V4", order: 4, classes: &[(&[1, 1, 1, 1], 1), (&[2, 2], 3)] },
    GroupData {
        degree: 4,
        name: "D4",
        order: 8,
        classes: &[(&[1, 1, 1, 1], 1), (&[2, 1, 1], 2), (&[2, 2], 3), (&[4], 2)],
    },
    GroupData { degree: 4, name: "A4", order: 12, classes: &[(&[1, 1, 1, 1], 1), (&[2, 2], 3), (&[3, 1], 8)] },
    GroupData {
        degree: 4,
        name: "S4",
        order: 24,
        classes: &[(&[1, 1, 1, 1], 1), (&[2, 1, 1], 6), (&[2, 2], 3), (&[3, 1], 8), (&[4], 6)],
    },
    GroupData { degree: 5, name: "C5", order: 5, classes: &[(&[1, 1, 1, 1, 1], 1), (&[5], 4)] },
    GroupData { degree: 5, name: "D5", order: 10, classes: &[(&[1, 1, 1, 1, 1], 1), (&[2, 2, 1], 5), (&[5], 4)] },
    GroupData {
        degree: 5,
        name: "F5",
        order: 20,
        classes: &[(&[1, 1, 1, 1, 1], 1), (&[2, 2, 1], 5), (&[4, 1], 10), (&[5], 4)],
    },
    GroupData {
        degree: 5,
        name: "A5",
        order: 60,
        classes: &[(&[1, 1, 1, 1, 1], 1), (&[2, 2, 1], 15), (&[3, 1, 1], 20), (&[5], 24)],
    },
    GroupData {
        degree: 5,
        name: "S5",
        order: 120,
        classes: &[
            (&[1, 1, 1, 1, 1], 1),
            (&[2, 1, 1, 1], 10),
            (&[2, 2, 1], 15),
            (&[3, 1, 1], 20),
            (&[3, 2], 20),
            (&[4, 1], 30),
            (&[5], 24),
        ],
    },
    GroupData {
        degree: 6,
        name: "C6",
        order: 6,
        classes: &[(&[1, 1, 1, 1, 1, 1], 1), (&[2, 2, 2], 1), (&[3, 3], 2), (&[6], 2)],
    },
    GroupData {
        degree: 6,
        name: "S3(6)",
        order: 6,
        classes: &[(&[1, 1, 1, 1, 1, 1], 1), (&[2, 2, 2], 3), (&[3, 3], 2)],
    },
    GroupData {
        degree: 6,
        name: "D6",
        order: 12,
        classes: &[(&[1, 1, 1, 1, 1, 1], 1), (&[2, 2, 1, 1], 3), (&[2, 2, 2], 4), (&[3, 3], 2), (&[6], 2)],
    },
    GroupData {
        degree: 6,
        name: "A4(6)",
        order: 12,
        classes: &[(&[1, 1, 1, 1, 1, 1], 1), (&[2, 2, 1, 1], 3), (&[3, 3], 8)],
    },
    GroupData {
        degree: 6,
        name: "F18",
        order: 18,
        classes: &[(&[1, 1, 1, 1, 1, 1], 1), (&[2, 2, 2], 3), (&[3, 1, 1, 1], 4), (&[3, 3], 4), (&[6], 6)],
    },
    GroupData {
        degree: 6,
        name: "2A4",
        order: 24,
        classes: &[
            (&[1, 1, 1, 1, 1, 1], 1),
            (&[2, 1, 1, 1, 1], 3),
            (&[2, 2, 1, 1], 3),
            (&[2, 2, 2], 1),
            (&[3, 3], 8),
            (&[6], 8),
        ],
    },
    GroupData {
        degree: 6,
        name: "S4(6d)",
        order: 24,
        classes: &[(&[1, 1, 1, 1, 1, 1], 1), (&[2, 2, 1, 1], 9), (&[3, 3], 8), (&[4, 2], 6)],
    },
    GroupData {
        degree: 6,
        name: "S4(6c)",
        order: 24,
        classes: &[(&[1, 1, 1, 1, 1, 1], 1), (&[2, 2, 1, 1], 3), (&[2, 2, 2], 6), (&[3, 3], 8), (&[4, 1, 1], 6)],
    },
    GroupData {
        degree: 6,
        name: "S3xS3",
        order: 36,
        classes: &[
            (&[1, 1, 1, 1, 1, 1], 1),
            (&[2, 2, 1, 1], 9),
            (&[2, 2, 2], 6),
            (&[3, 1, 1, 1], 4),
            (&[3, 3], 4),
            (&[6], 12),
        ],
    },
    GroupData {
        degree: 6,
        name: "F36",
        order: 36,
        classes: &[(&[1, 1, 1, 1, 1, 1], 1), (&[2, 2, 1, 1], 9), (&[3, 1, 1, 1], 4), (&[3, 3], 4), (&[4, 2], 18)],
    },
    GroupData {
        degree: 6,
        name: "S2wrS3",
        order: 48,
        classes: &[
            (&[1, 1, 1, 1, 1, 1], 1),
            (&[2, 1, 1, 1, 1], 3),
            (&[2, 2, 1, 1], 9),
            (&[2, 2, 2], 7),
            (&[3, 3], 8),
            (&[4, 1, 1], 6),
            (&[4, 2], 6),
            (&[6], 8),
        ],
    },
    GroupData {
        degree: 6,
        name: "PSL(2,5)",
        order: 60,
        classes: &[(&[1, 1, 1, 1, 1, 1], 1), (&[2, 2, 1, 1], 15), (&[3, 3], 20), (&[5, 1], 24)],
    },
    GroupData {
        degree: 6,
        name: "S3wrS2",
        order: 72,
        classes: &[
            (&[1, 1, 1, 1, 1, 1], 1),
            (&[2, 1, 1, 1, 1], 6),
            (&[2, 2, 1, 1], 9),
            (&[2, 2, 2], 6),
            (&[3, 1, 1, 1], 4),
            (&[3, 2, 1], 12),
            (&[3, 3], 4),
            (&[4, 2], 18),
            (&[6], 12),
        ],
    },
    GroupData {
        degree: 6,
        name: "PGL(2,5)",
        order: 120,
        classes: &[
            (&[1, 1, 1, 1, 1, 1], 1),
            (&[2, 2, 1, 1], 15),
            (&[2, 2, 2], 10),
            (&[3, 3], 20),
            (&[4, 1, 1], 30),
            (&[5, 1], 24),
            (&[6], 20),
        ],
    },
    GroupData {
        degree: 6,
        name: "A6",
        order: 360,
        classes: &[
            (&[1, 1, 1, 1, 1, 1], 1),
            (&[2, 2, 1, 1], 45),
            (&[3, 1, 1, 1], 40),
            (&[3, 3], 40),
            (&[4, 2], 90),
            (&[5, 1], 144),
        ],
    },
    GroupData {
        degree: 6,
        name: "S6",
        order: 720,
        classes: &[
            (&[1, 1, 1, 1, 1, 1], 1),
            (&[2, 1, 1, 1, 1], 15),
            (&[2, 2, 1, 1], 45),
            (&[2, 2, 2], 15),
            (&[3, 1, 1, 1], 40),
            (&[3, 2, 1], 120),
            (&[3, 3], 40),
            (&[4, 1, 1], 90),
            (&[4, 2], 90),
            (&[5, 1], 144),
            (&[6], 120),
        ],
    },
    GroupData { degree: 7, name: "C7", order: 7, classes: &[(&[1, 1, 1, 1, 1, 1, 1], 1), (&[7], 6)] },
    GroupData {
        degree: 7,
        name: "D7",
        order: 14,
        classes: &[(&[1, 1, 1, 1, 1, 1, 1], 1), (&[2, 2, 2, 1], 7), (&[7], 6)],
    },
    GroupData {
        degree: 7,
        name: "F21",
        order: 21,
        classes: &[(&[1, 1, 1, 1, 1, 1, 1], 1), (&[3, 3, 1], 14), (&[7], 6)],
    },
    GroupData {
        degree: 7,
        name: "F42",
        order: 42,
        classes: &[(&[1, 1, 1, 1, 1, 1, 1], 1), (&[2, 2, 2, 1], 7), (&[3, 3, 1], 14), (&[6, 1], 14), (&[7], 6)],
    },
    GroupData {
        degree: 7,
        name: "PSL(3,2)",
        order: 168,
        classes: &[(&[1, 1, 1, 1, 1, 1, 1], 1), (&[2, 2, 1, 1, 1], 21), (&[3, 3, 1], 56), (&[4, 2, 1], 42), (&[7], 48)],
    },
    GroupData {
        degree: 7,
        name: "A7",
        order: 2520,
        classes: &[
            (&[1, 1, 1, 1, 1, 1, 1], 1),
            (&[2, 2, 1, 1, 1], 105),
            (&[3, 1, 1, 1, 1], 70),
            (&[3, 2, 2], 210),
            (&[3, 3, 1], 280),
            (&[4, 2, 1], 630),
            (&[5, 1, 1], 504),
            (&[7], 720),
        ],
    },
    GroupData {
        degree: 7,
        name: "S7",
        order: 5040,
        classes: &[
            (&[1, 1, 1, 1, 1, 1, 1], 1),
            (&[2, 1, 1, 1, 1, 1], 21),
            (&[2, 2, 1, 1, 1], 105),
            (&[2, 2, 2, 1], 105),
            (&[3, 1, 1, 1, 1], 70),
            (&[3, 2, 1, 1], 420),
            (&[3, 2, 2], 210),
            (&[3, 3, 1], 280),
            (&[4, 1, 1, 1], 210),
            (&[4, 2, 1], 630),
            (&[4, 3], 420),
            (&[5, 1, 1], 504),
            (&[5, 2], 504),
            (&[6, 1], 840),
            (&[7], 720),
        ],
    },
];
