//! Catalog of named graphs: the 44 Table-style named graphs plus the
//! Truncated Prism. Edge lists are fixed fixtures validated in tests by
//! published invariants (order, size, regularity, spectra, planarity or
//! structure checks as applicable).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named fixture: slug, human-readable name, order and edge list.
pub struct CatalogEntry {
    pub slug: &'static str,
    pub display: &'static str,
    pub n: usize,
    pub edges: &'static [(usize, usize)],
}

/// Every catalog entry, sorted by slug.
pub static CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        slug: "bidiakis_cube",
        display: "Bidiakis Cube",
        n: 12,
        edges: &[
            (0, 1), (0, 3), (0, 8), (1, 4), (1, 7), (2, 3), (2, 4), (2, 11), (3, 9), (4, 5),
            (5, 6), (5, 11), (6, 7), (6, 10), (7, 8), (8, 9), (9, 10), (10, 11)
        ],
    },
    CatalogEntry {
        slug: "blanusa_first_snark",
        display: "Blanusa First Snark Graph",
        n: 18,
        edges: &[
            (0, 4), (0, 5), (0, 12), (1, 2), (1, 6), (1, 13), (2, 3), (2, 7), (3, 4), (3, 10),
            (4, 9), (5, 7), (5, 8), (6, 8), (6, 9), (7, 9), (8, 14), (10, 11), (10, 15), (11,
            12), (11, 16), (12, 17), (13, 15), (13, 16), (14, 16), (14, 17), (15, 17)
        ],
    },
    CatalogEntry {
        slug: "blanusa_second_snark",
        display: "Blanusa Second Snark Graph",
        n: 18,
        edges: &[
            (0, 4), (0, 5), (0, 12), (1, 2), (1, 6), (1, 13), (2, 7), (2, 10), (3, 4), (3, 8),
            (3, 14), (4, 9), (5, 7), (5, 8), (6, 8), (6, 9), (7, 9), (10, 11), (10, 15), (11,
            12), (11, 16), (12, 17), (13, 15), (13, 16), (14, 16), (14, 17), (15, 17)
        ],
    },
    CatalogEntry {
        slug: "bull",
        display: "Bull Graph",
        n: 5,
        edges: &[
            (0, 1), (0, 2), (1, 2), (1, 3), (2, 4)
        ],
    },
    CatalogEntry {
        slug: "butterfly",
        display: "Butterfly Graph",
        n: 5,
        edges: &[
            (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)
        ],
    },
    CatalogEntry {
        slug: "chvatal",
        display: "Chvatal Graph",
        n: 12,
        edges: &[
            (0, 1), (0, 6), (0, 8), (0, 11), (1, 4), (1, 7), (1, 9), (2, 7), (2, 8), (2, 10),
            (2, 11), (3, 7), (3, 8), (3, 9), (3, 11), (4, 5), (4, 8), (4, 10), (5, 6), (5, 9),
            (5, 11), (6, 7), (6, 10), (9, 10)
        ],
    },
    CatalogEntry {
        slug: "claw",
        display: "Claw Graph",
        n: 4,
        edges: &[
            (0, 1), (0, 2), (0, 3)
        ],
    },
    CatalogEntry {
        slug: "clebsch",
        display: "Clebsch Graph",
        n: 16,
        edges: &[
            (0, 1), (0, 7), (0, 8), (0, 10), (0, 14), (1, 6), (1, 9), (1, 11), (1, 15), (2, 3),
            (2, 6), (2, 8), (2, 11), (2, 14), (3, 7), (3, 9), (3, 10), (3, 15), (4, 5), (4, 6),
            (4, 9), (4, 10), (4, 14), (5, 7), (5, 8), (5, 11), (5, 15), (6, 7), (6, 12), (7,
            13), (8, 9), (8, 12), (9, 13), (10, 11), (10, 12), (11, 13), (12, 13), (12, 15),
            (13, 14), (14, 15)
        ],
    },
    CatalogEntry {
        slug: "dart",
        display: "Dart Graph",
        n: 5,
        edges: &[
            (0, 1), (0, 2), (0, 4), (1, 4), (2, 4), (3, 4)
        ],
    },
    CatalogEntry {
        slug: "desargues",
        display: "Desargues Graph",
        n: 20,
        edges: &[
            (0, 1), (0, 11), (0, 15), (1, 8), (1, 12), (2, 3), (2, 11), (2, 19), (3, 4), (3,
            12), (4, 5), (4, 9), (5, 6), (5, 18), (6, 7), (6, 13), (7, 8), (7, 16), (8, 9), (9,
            10), (10, 11), (10, 17), (12, 13), (13, 14), (14, 15), (14, 19), (15, 16), (16,
            17), (17, 18), (18, 19)
        ],
    },
    CatalogEntry {
        slug: "diamond",
        display: "Diamond Graph",
        n: 4,
        edges: &[
            (0, 1), (0, 2), (1, 2), (1, 3), (2, 3)
        ],
    },
    CatalogEntry {
        slug: "dodecahedral",
        display: "Dodecahedral Graph",
        n: 20,
        edges: &[
            (0, 1), (0, 2), (0, 11), (1, 12), (1, 18), (2, 3), (2, 19), (3, 4), (3, 10), (4,
            5), (4, 8), (5, 6), (5, 19), (6, 7), (6, 17), (7, 8), (7, 15), (8, 9), (9, 10), (9,
            14), (10, 11), (11, 13), (12, 13), (12, 16), (13, 14), (14, 15), (15, 16), (16,
            17), (17, 18), (18, 19)
        ],
    },
    CatalogEntry {
        slug: "durer",
        display: "Durer Graph",
        n: 12,
        edges: &[
            (0, 2), (0, 4), (0, 6), (1, 3), (1, 5), (1, 7), (2, 4), (2, 8), (3, 5), (3, 9), (4,
            10), (5, 11), (6, 7), (6, 11), (7, 8), (8, 9), (9, 10), (10, 11)
        ],
    },
    CatalogEntry {
        slug: "errera",
        display: "Errera Graph",
        n: 17,
        edges: &[
            (0, 1), (0, 6), (0, 7), (0, 8), (0, 14), (1, 6), (1, 7), (1, 9), (1, 16), (2, 4),
            (2, 9), (2, 10), (2, 11), (2, 15), (3, 5), (3, 10), (3, 11), (3, 12), (3, 16), (4,
            11), (4, 12), (4, 13), (4, 15), (5, 7), (5, 12), (5, 13), (5, 14), (5, 16), (6, 8),
            (6, 9), (6, 15), (7, 14), (7, 16), (8, 13), (8, 14), (8, 15), (9, 10), (9, 15), (9,
            16), (10, 11), (10, 16), (11, 12), (12, 13), (13, 14), (13, 15)
        ],
    },
    CatalogEntry {
        slug: "flower_snark",
        display: "Flower Snark",
        n: 20,
        edges: &[
            (0, 5), (0, 10), (0, 15), (1, 6), (1, 11), (1, 16), (2, 7), (2, 12), (2, 17), (3,
            8), (3, 13), (3, 18), (4, 9), (4, 14), (4, 19), (5, 6), (5, 9), (6, 7), (7, 8), (8,
            9), (10, 11), (10, 19), (11, 12), (12, 13), (13, 14), (14, 15), (15, 16), (16, 17),
            (17, 18), (18, 19)
        ],
    },
    CatalogEntry {
        slug: "folkman",
        display: "Folkman Graph",
        n: 20,
        edges: &[
            (0, 1), (0, 7), (0, 11), (0, 15), (1, 6), (1, 8), (1, 12), (2, 3), (2, 9), (2, 13),
            (2, 19), (3, 4), (3, 8), (3, 10), (4, 5), (4, 9), (4, 17), (5, 6), (5, 16), (5,
            18), (6, 7), (6, 17), (7, 8), (7, 12), (8, 9), (9, 10), (10, 11), (10, 15), (11,
            14), (11, 16), (12, 13), (12, 19), (13, 14), (13, 18), (14, 15), (14, 19), (15,
            16), (16, 17), (17, 18), (18, 19)
        ],
    },
    CatalogEntry {
        slug: "fork",
        display: "Fork Graph",
        n: 5,
        edges: &[
            (0, 1), (1, 2), (2, 3), (2, 4)
        ],
    },
    CatalogEntry {
        slug: "franklin",
        display: "Franklin Graph",
        n: 12,
        edges: &[
            (0, 1), (0, 3), (0, 7), (1, 4), (1, 10), (2, 3), (2, 5), (2, 11), (3, 8), (4, 5),
            (4, 9), (5, 6), (6, 7), (6, 11), (7, 8), (8, 9), (9, 10), (10, 11)
        ],
    },
    CatalogEntry {
        slug: "frucht",
        display: "Frucht Graph",
        n: 12,
        edges: &[
            (0, 1), (0, 8), (0, 9), (1, 4), (1, 9), (2, 3), (2, 7), (2, 8), (3, 9), (3, 10),
            (4, 5), (4, 10), (5, 6), (5, 11), (6, 7), (6, 11), (7, 8), (10, 11)
        ],
    },
    CatalogEntry {
        slug: "gem",
        display: "Gem Graph",
        n: 5,
        edges: &[
            (0, 1), (0, 4), (1, 2), (1, 4), (2, 3), (2, 4), (3, 4)
        ],
    },
    CatalogEntry {
        slug: "goldner_harary",
        display: "Goldner Harary Graph",
        n: 11,
        edges: &[
            (0, 6), (0, 7), (0, 9), (1, 7), (1, 8), (1, 9), (2, 6), (2, 8), (2, 9), (3, 6), (3,
            7), (3, 10), (4, 7), (4, 8), (4, 10), (5, 6), (5, 8), (5, 10), (6, 7), (6, 8), (6,
            9), (6, 10), (7, 8), (7, 9), (7, 10), (8, 9), (8, 10)
        ],
    },
    CatalogEntry {
        slug: "golomb",
        display: "Golomb Graph",
        n: 10,
        edges: &[
            (0, 1), (0, 5), (0, 6), (0, 9), (1, 2), (1, 9), (2, 3), (2, 7), (2, 9), (3, 4), (3,
            9), (4, 5), (4, 8), (4, 9), (5, 9), (6, 7), (6, 8), (7, 8)
        ],
    },
    CatalogEntry {
        slug: "grotzsch",
        display: "Grotzsch Graph",
        n: 11,
        edges: &[
            (0, 1), (0, 4), (0, 7), (0, 9), (1, 3), (1, 6), (1, 8), (2, 6), (2, 7), (2, 8), (2,
            9), (2, 10), (3, 5), (3, 7), (3, 10), (4, 5), (4, 6), (4, 10), (5, 8), (5, 9)
        ],
    },
    CatalogEntry {
        slug: "heawood",
        display: "Heawood Graph",
        n: 14,
        edges: &[
            (0, 1), (0, 5), (0, 9), (1, 2), (1, 6), (2, 3), (2, 13), (3, 4), (3, 10), (4, 5),
            (4, 7), (5, 12), (6, 7), (6, 11), (7, 8), (8, 9), (8, 13), (9, 10), (10, 11), (11,
            12), (12, 13)
        ],
    },
    CatalogEntry {
        slug: "herschel",
        display: "Herschel Graph",
        n: 11,
        edges: &[
            (0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 6), (2, 7), (2, 8), (2, 9), (2, 10),
            (3, 7), (3, 8), (4, 9), (4, 10), (5, 7), (5, 9), (6, 8), (6, 10)
        ],
    },
    CatalogEntry {
        slug: "hexahedral",
        display: "Hexahedral Graph",
        n: 8,
        edges: &[
            (0, 1), (0, 3), (0, 4), (1, 2), (1, 7), (2, 3), (2, 6), (3, 5), (4, 5), (4, 7), (5,
            6), (6, 7)
        ],
    },
    CatalogEntry {
        slug: "hoffman",
        display: "Hoffman Graph",
        n: 16,
        edges: &[
            (0, 1), (0, 3), (0, 5), (0, 13), (1, 9), (1, 11), (1, 15), (2, 3), (2, 6), (2, 8),
            (2, 14), (3, 7), (3, 11), (4, 5), (4, 6), (4, 10), (4, 14), (5, 7), (5, 9), (6, 7),
            (6, 12), (7, 13), (8, 11), (8, 12), (8, 15), (9, 10), (9, 14), (10, 12), (10, 15),
            (11, 14), (12, 13), (13, 15)
        ],
    },
    CatalogEntry {
        slug: "house",
        display: "House Graph",
        n: 5,
        edges: &[
            (0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 4)
        ],
    },
    CatalogEntry {
        slug: "house_x",
        display: "HouseX Graph",
        n: 5,
        edges: &[
            (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)
        ],
    },
    CatalogEntry {
        slug: "icosahedral",
        display: "Icosahedral Graph",
        n: 12,
        edges: &[
            (0, 1), (0, 3), (0, 7), (0, 9), (0, 10), (1, 4), (1, 7), (1, 8), (1, 10), (2, 3),
            (2, 5), (2, 6), (2, 9), (2, 11), (3, 6), (3, 7), (3, 9), (4, 5), (4, 8), (4, 10),
            (4, 11), (5, 6), (5, 8), (5, 11), (6, 7), (6, 8), (7, 8), (9, 10), (9, 11), (10,
            11)
        ],
    },
    CatalogEntry {
        slug: "krackhardt_kite",
        display: "Krackhardt Kite Graph",
        n: 10,
        edges: &[
            (0, 1), (0, 2), (0, 3), (0, 5), (1, 3), (1, 4), (1, 6), (2, 3), (2, 5), (3, 4), (3,
            5), (3, 6), (4, 6), (5, 6), (5, 7), (6, 7), (7, 8), (8, 9)
        ],
    },
    CatalogEntry {
        slug: "moebius_kantor",
        display: "Moebius Kantor Graph",
        n: 16,
        edges: &[
            (0, 1), (0, 7), (0, 11), (1, 4), (1, 8), (2, 3), (2, 7), (2, 15), (3, 4), (3, 12),
            (4, 5), (5, 6), (5, 14), (6, 7), (6, 9), (8, 9), (8, 13), (9, 10), (10, 11), (10,
            15), (11, 12), (12, 13), (13, 14), (14, 15)
        ],
    },
    CatalogEntry {
        slug: "moser_spindle",
        display: "Moser Spindle",
        n: 7,
        edges: &[
            (0, 1), (0, 2), (0, 6), (1, 2), (1, 6), (2, 5), (3, 4), (3, 5), (3, 6), (4, 5), (4,
            6)
        ],
    },
    CatalogEntry {
        slug: "octahedral",
        display: "Octahedral Graph",
        n: 6,
        edges: &[
            (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 4), (2, 5), (3, 4), (3,
            5), (4, 5)
        ],
    },
    CatalogEntry {
        slug: "pappus",
        display: "Pappus Graph",
        n: 18,
        edges: &[
            (0, 1), (0, 9), (0, 13), (1, 10), (1, 16), (2, 3), (2, 11), (2, 17), (3, 4), (3,
            14), (4, 5), (4, 9), (5, 6), (5, 10), (6, 7), (6, 15), (7, 8), (7, 12), (8, 9), (8,
            17), (10, 11), (11, 12), (12, 13), (13, 14), (14, 15), (15, 16), (16, 17)
        ],
    },
    CatalogEntry {
        slug: "petersen",
        display: "Petersen Graph",
        n: 10,
        edges: &[
            (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7), (3, 4), (3, 8), (4, 9), (5,
            7), (5, 8), (6, 8), (6, 9), (7, 9)
        ],
    },
    CatalogEntry {
        slug: "poussin",
        display: "Poussin Graph",
        n: 15,
        edges: &[
            (0, 1), (0, 2), (0, 7), (1, 2), (1, 6), (1, 7), (2, 6), (2, 7), (2, 8), (3, 4), (3,
            5), (3, 8), (3, 9), (3, 13), (4, 5), (4, 9), (5, 6), (5, 8), (5, 9), (5, 10), (6,
            7), (6, 8), (6, 10), (6, 11), (7, 8), (7, 11), (7, 12), (8, 12), (8, 13), (9, 10),
            (9, 13), (9, 14), (10, 11), (10, 14), (11, 12), (11, 14), (12, 13), (12, 14), (13,
            14)
        ],
    },
    CatalogEntry {
        slug: "robertson",
        display: "Robertson Graph",
        n: 19,
        edges: &[
            (0, 1), (0, 10), (0, 13), (0, 16), (1, 4), (1, 11), (1, 18), (2, 3), (2, 7), (2,
            15), (2, 18), (3, 4), (3, 10), (3, 12), (4, 5), (4, 8), (5, 6), (5, 14), (5, 17),
            (6, 7), (6, 10), (6, 11), (7, 8), (7, 13), (8, 9), (8, 16), (9, 10), (9, 14), (9,
            18), (11, 12), (11, 15), (12, 13), (12, 17), (13, 14), (14, 15), (15, 16), (16,
            17), (17, 18)
        ],
    },
    CatalogEntry {
        slug: "shrikhande",
        display: "Shrikhande Graph",
        n: 16,
        edges: &[
            (0, 1), (0, 3), (0, 4), (0, 5), (0, 12), (0, 15), (1, 2), (1, 5), (1, 6), (1, 12),
            (1, 13), (2, 3), (2, 6), (2, 7), (2, 13), (2, 14), (3, 4), (3, 7), (3, 14), (3,
            15), (4, 5), (4, 7), (4, 8), (4, 9), (5, 6), (5, 9), (5, 10), (6, 7), (6, 10), (6,
            11), (7, 8), (7, 11), (8, 9), (8, 11), (8, 12), (8, 13), (9, 10), (9, 13), (9, 14),
            (10, 11), (10, 14), (10, 15), (11, 12), (11, 15), (12, 13), (12, 15), (13, 14),
            (14, 15)
        ],
    },
    CatalogEntry {
        slug: "sousselier",
        display: "Sousselier Graph",
        n: 16,
        edges: &[
            (0, 1), (0, 5), (0, 11), (0, 14), (1, 2), (1, 15), (2, 3), (2, 6), (3, 4), (3, 8),
            (3, 14), (4, 5), (4, 15), (5, 6), (5, 9), (6, 7), (7, 8), (7, 15), (8, 9), (8, 12),
            (9, 10), (10, 11), (10, 15), (11, 12), (12, 13), (13, 14), (13, 15)
        ],
    },
    CatalogEntry {
        slug: "thomsen",
        display: "Thomsen Graph",
        n: 6,
        edges: &[
            (0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)
        ],
    },
    CatalogEntry {
        slug: "tietze",
        display: "Tietze Graph",
        n: 12,
        edges: &[
            (0, 1), (0, 5), (0, 9), (1, 2), (1, 6), (2, 3), (2, 7), (3, 8), (3, 10), (4, 6),
            (4, 7), (4, 11), (5, 7), (5, 8), (6, 8), (9, 10), (9, 11), (10, 11)
        ],
    },
    CatalogEntry {
        slug: "truncated_prism",
        display: "Truncated Prism",
        n: 18,
        edges: &[
            (0, 1), (0, 10), (0, 11), (1, 6), (1, 7), (2, 3), (2, 5), (2, 15), (3, 5), (3, 12),
            (4, 7), (4, 9), (4, 17), (5, 6), (6, 7), (8, 11), (8, 12), (8, 13), (9, 10), (9,
            17), (10, 11), (12, 13), (13, 16), (14, 15), (14, 16), (14, 17), (15, 16)
        ],
    },
    CatalogEntry {
        slug: "truncated_tetrahedral",
        display: "Truncated Tetrahedral Graph",
        n: 12,
        edges: &[
            (0, 1), (0, 4), (0, 11), (1, 4), (1, 8), (2, 3), (2, 10), (2, 11), (3, 5), (3, 6),
            (4, 5), (5, 6), (6, 7), (7, 8), (7, 9), (8, 9), (9, 10), (10, 11)
        ],
    },
    CatalogEntry {
        slug: "wagner",
        display: "Wagner Graph",
        n: 8,
        edges: &[
            (0, 1), (0, 4), (0, 7), (1, 2), (1, 5), (2, 3), (2, 6), (3, 4), (3, 7), (4, 5), (5,
            6), (6, 7)
        ],
    },
];

/// Look up a named graph by its slug (for example "petersen").
pub fn named_graph(name: &str) -> Result<Graph> {
    for entry in CATALOG {
        if entry.slug == name {
            return Ok(Graph::from_edges(entry.n, entry.edges));
        }
    }
    Err(Error::UnknownGraph {
        name: name.to_string(),
        available: catalog_names().join(", "),
    })
}

/// All catalog slugs in order.
pub fn catalog_names() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.slug).collect()
}
