//! The printed closed forms, transcribed into the expression language of
//! [`super::expr`]. Right-hand sides are kept exactly as printed, including
//! the ones that disagree with direct computation.
//!
//! Variable names: `z` is `|Z(G)|`, `h` is `|G/Z(G)|`; the rest follow the
//! family parameters (`m`, `n`, `p`, `q`, `k`).

use super::{Case, FormulaEntry, GroupRow, SpectrumLiteral};

const fn case(when: &'static str, value: &'static str) -> Case {
    Case { when, value }
}

macro_rules! one {
    ($v:expr) => {
        &[Case { when: "true", value: $v }]
    };
}

const NONE: &[Case] = &[];
const NO_ROWS: &[GroupRow] = &[];

const SZ_A: SpectrumLiteral = &[("-1", "19z - 6"), ("4z - 1", "1"), ("3z - 1", "5")];
const SZ_L: SpectrumLiteral = &[("0", "6"), ("4z", "4z - 1"), ("3z", "15z - 5")];
const SZ_Q: SpectrumLiteral = &[("8z - 2", "1"), ("4z - 2", "4z - 1"), ("6z - 2", "5"), ("3z - 2", "15z - 5")];

const PP_A: SpectrumLiteral = &[("-1", "(p^2 - 1)z - p - 1"), ("(p - 1)z - 1", "p + 1")];
const PP_L: SpectrumLiteral = &[("0", "p + 1"), ("(p - 1)z", "(p^2 - 1)z - p - 1")];
const PP_Q: SpectrumLiteral = &[("2(p - 1)z - 2", "p + 1"), ("(p - 1)z - 2", "(p^2 - 1)z - p - 1")];

const DI_A: SpectrumLiteral = &[("-1", "(2m - 1)z - m - 1"), ("z - 1", "m"), ("(m - 1)z - 1", "1")];
const DI_L: SpectrumLiteral = &[("0", "m + 1"), ("(m - 1)z", "(m - 1)z - 1"), ("z", "m(z - 1)")];
const DI_Q: SpectrumLiteral = &[
    ("2(m - 1)z - 2", "1"),
    ("(m - 1)z - 2", "(m - 1)z - 1"),
    ("2z - 2", "m"),
    ("z - 2", "m(z - 1)"),
];

const PQ_A: SpectrumLiteral = &[("-1", "p*q - q - 1"), ("p - 2", "q"), ("q - 2", "1")];
const PQ_L: SpectrumLiteral = &[("0", "q + 1"), ("q - 1", "q - 2"), ("p - 1", "p*q - 2q")];
const PQ_Q: SpectrumLiteral = &[("2q - 4", "1"), ("q - 3", "q - 2"), ("2p - 4", "q"), ("p - 3", "p*q - 2q")];

const QD_A: SpectrumLiteral = &[("-1", "2^n - 2^(n - 2) - 3"), ("1", "2^(n - 2)"), ("2^(n - 1) - 3", "1")];
const QD_L: SpectrumLiteral = &[("0", "2^(n - 2) + 1"), ("2^(n - 1) - 2", "2^(n - 1) - 3"), ("2", "2^(n - 2)")];
const QD_Q: SpectrumLiteral = &[
    ("2^n - 6", "1"),
    ("2^(n - 1) - 4", "2^(n - 1) - 3"),
    ("2", "2^(n - 2)"),
    ("0", "2^(n - 2)"),
];

const PSL_A: SpectrumLiteral = &[
    ("-1", "2^(3k) - 2^(2k) - 2^(k + 1) - 2"),
    ("2^k - 1", "2^(k - 1)(2^k - 1)"),
    ("2^k - 2", "2^k + 1"),
    ("2^k - 3", "2^(k - 1)(2^k + 1)"),
];
const PSL_L: SpectrumLiteral = &[
    ("0", "2^(2k) + 2^k + 1"),
    ("2^k - 1", "2^(2k) - 2^k - 2"),
    ("2^k - 2", "2^(k - 1)(2^(2k) - 2^(k + 1) - 3)"),
    ("2^k", "2^(k - 1)(2^(2k) - 2^(k + 1) + 1)"),
];
const PSL_Q: SpectrumLiteral = &[
    ("2^(k + 1) - 4", "2^k + 1"),
    ("2^k - 3", "2^(2k) - 2^k - 2"),
    ("2^(k + 1) - 6", "2^(k - 1)(2^k + 1)"),
    ("2^k - 4", "2^(k - 1)(2^(2k) - 2^(k + 1) - 3)"),
    ("2^(k + 1) - 2", "2^(k - 1)(2^k - 1)"),
    ("2^k - 2", "2^(k - 1)(2^(2k) - 2^(k + 1) + 1)"),
];

const GL_A: SpectrumLiteral = &[
    ("-1", "q^4 - q^3 - 2q^2 - q"),
    ("q^2 - 3q + 1", "q(q + 1)/2"),
    ("q^2 - q - 1", "q(q - 1)/2"),
    ("q^2 - 2q", "q + 1"),
];
const GL_L: SpectrumLiteral = &[
    ("0", "q^2 + q + 1"),
    ("q^2 - 3q + 2", "q(q + 1)(q^2 - 3q + 1)/2"),
    ("q^2 - q", "q(q - 1)(q^2 - q - 1)/2"),
    ("q^2 - 2q + 1", "q(q + 1)(q - 2)"),
];
const GL_Q: SpectrumLiteral = &[
    ("2q^2 - 6q - 2", "q(q + 1)/2"),
    ("q^2 - 3q", "q(q + 1)(q^2 - 3q + 1)/2"),
    ("2q^2 - 2q - 2", "q(q - 1)/2"),
    ("q^2 - q - 2", "q(q - 1)(q^2 - q - 1)/2"),
    ("2q^2 - 4q", "q + 1"),
    ("q^2 + 2q - 1", "q(q + 1)(q - 2)"),
];

const HU_A: SpectrumLiteral = &[("-1", "(2^n - 1)^2"), ("2^n - 1", "2^n - 1")];
const HU_L: SpectrumLiteral = &[("0", "2^n - 1"), ("2^n", "2^(2n) - 2^(n + 1) + 1")];
const HU_Q: SpectrumLiteral = &[("2^(n + 1) - 2", "2^n - 1"), ("2^n - 2", "2^(2n) - 2^(n + 1) + 1")];

const HV_A: SpectrumLiteral = &[("-1", "p^(3n) - 2p^n - 1"), ("p^(2n) - p^n - 1", "p^n + 1")];
const HV_L: SpectrumLiteral = &[("0", "p^n + 1"), ("p^(2n) - p^n", "p^(3n) - 2p^n - 1")];
const HV_Q: SpectrumLiteral = &[
    ("2p^(2n) - 2p^n - 2", "p^n + 1"),
    ("p^(2n) - p^n - 2", "p^(3n) - 2p^n - 1"),
];

const SL23_A: SpectrumLiteral = &[("-1", "15"), ("1", "3"), ("3", "4")];
const SL23_L: SpectrumLiteral = &[("0", "7"), ("2", "3"), ("4", "12")];
const SL23_Q: SpectrumLiteral = &[("0", "3"), ("2", "15"), ("6", "4")];

const S4_A: SpectrumLiteral = &[
    ("1", "7"),
    ("-1", "10"),
    ("sqrt(5)", "2"),
    ("-sqrt(5)", "2"),
    ("(3 + sqrt(17))/2", "1"),
    ("(3 - sqrt(17))/2", "1"),
];
const S4_L: SpectrumLiteral = &[
    ("0", "5"),
    ("1", "3"),
    ("2", "4"),
    ("3", "6"),
    ("5", "1"),
    ("4 + sqrt(13)", "2"),
    ("4 - sqrt(13)", "2"),
];
const S4_Q: SpectrumLiteral = &[
    ("0", "4"),
    ("1", "6"),
    ("2", "4"),
    ("3", "3"),
    ("5", "1"),
    ("4 + sqrt(5)", "2"),
    ("4 - sqrt(5)", "2"),
    ("(11 + sqrt(41))/2", "1"),
    ("(11 - sqrt(41))/2", "1"),
];

const fn row(name: &'static str, groups: &'static [&'static str], values: [&'static str; 3]) -> GroupRow {
    GroupRow { name, groups, values, spectra: None }
}

const PLANAR_ROWS: &[GroupRow] = &[
    row("D_6", &["dihedral:m=3"], ["3", "16/5", "16/5"]),
    row("D_8", &["dihedral:m=4"], ["6", "7/3", "6"]),
    row("D_10", &["dihedral:m=5"], ["7", "16", "6"]),
    row("D_12", &["dihedral:m=6"], ["12", "72/5", "54/5"]),
    row("Q_8", &["dicyclic:m=2"], ["6", "6", "6"]),
    row("Q_12", &["dicyclic:m=3"], ["12", "72/5", "54/5"]),
    row("Z_2 x D_8", &["product:inner=dihedral:m=4,k=2"], ["18", "18", "18"]),
    row("Z_2 x Q_8", &["product:inner=dicyclic:m=2,k=2"], ["18", "18", "18"]),
    row("M_16", &["m16"], ["18", "18", "18"]),
    row("Z_4 x| Z_4", &["z4z4"], ["18", "18", "18"]),
    row("D_8 * Z_4", &["d8z4"], ["18", "18", "18"]),
    row("SG(16,3)", &["sg16_3"], ["18", "18", "18"]),
    row("A_4", &["a4"], ["12", "140/11", "256/11"]),
    row("A_5", &["a5", "psl2:k=2"], ["76", "3924/59", "3844/59"]),
    GroupRow {
        name: "S_4",
        groups: &["s4"],
        values: ["17 + 4sqrt(5) + sqrt(17)", "(526 + 46sqrt(13))/23", "756/23"],
        spectra: Some([S4_A, S4_L, S4_Q]),
    },
    GroupRow {
        name: "SL(2,3)",
        groups: &["sl23"],
        values: ["30", "408/11", "312/11"],
        spectra: Some([SL23_A, SL23_L, SL23_Q]),
    },
    row("Sz(2)", &["suzuki2"], ["26", "504/19", "484/19"]),
];

const TOROIDAL_ROWS: &[GroupRow] = &[
    row("D_14", &["dihedral:m=7"], ["11", "480/13", "370/13"]),
    row("D_16", &["dihedral:m=8"], ["18", "230/7", "192/7"]),
    row("Q_16", &["dicyclic:m=4"], ["42", "962/15", "185"]),
    row("QD_16", &["quasidihedral:n=4"], ["18", "236/7", "480/7"]),
    row("D_6 x Z_3", &["product:inner=dihedral:m=3,k=3"], ["22", "48", "59"]),
    row("A_4 x Z_2", &["product:inner=a4,k=2"], ["34", "390/11", "408/11"]),
    row("Z_7 x| Z_3", &["pq:p=3,q=7"], ["25", "103/4", "677/20"]),
];

pub(super) static REGISTRY: [FormulaEntry; 21] = [
    FormulaEntry {
        id: "F1",
        statement: "Theorem: G/Z(G) isomorphic to the Suzuki group Sz(2)",
        quote: "the Suzuki group presented by",
        params: &["z"],
        domain: "z >= 1",
        cases: [
            one!("38z - 12"),
            &[case("z <= 4", "(732z - 228)/19"), case("z > 4", "(120z^2 + 122z - 38)/19")],
            &[case("z = 1", "(712z - 228)/19"), case("z > 1", "(120z^2 - 530z - 190)/19")],
        ],
        value_sets: None,
        spectra: Some([SZ_A, SZ_L, SZ_Q]),
        rows: NO_ROWS,
        notes: &["LE+ for z > 1 is printed with -530z; summing the terms of the derivation gives +530z."],
    },
    FormulaEntry {
        id: "F2",
        statement: "Theorem: G/Z(G) isomorphic to Z_p x Z_p",
        quote: "where p is a prime integer",
        params: &["p", "z"],
        domain: "prime(p) and z >= 1",
        cases: [
            one!("2(p^2 - 1)z - 2(p + 1)"),
            one!("2(p^2 - 1)z - 2(p + 1)"),
            one!("2(p^2 - 1)z - 2(p + 1)"),
        ],
        value_sets: None,
        spectra: Some([PP_A, PP_L, PP_Q]),
        rows: NO_ROWS,
        notes: &[],
    },
    FormulaEntry {
        id: "F3",
        statement: "Corollary: non-abelian groups of order p^3",
        quote: "2p^3 - 4p - 2",
        params: &["p"],
        domain: "prime(p)",
        cases: [one!("2p^3 - 4p - 2"), one!("2p^3 - 4p - 2"), one!("2p^3 - 4p - 2")],
        value_sets: None,
        spectra: None,
        rows: NO_ROWS,
        notes: &[],
    },
    FormulaEntry {
        id: "F4",
        statement: "Theorem: G/Z(G) isomorphic to D_2m",
        quote: "for m >= 2",
        params: &["m", "z"],
        domain: "m >= 2 and z >= 1",
        cases: [
            one!("(4m - 2)z - 2(m + 1)"),
            &[
                case(
                    "m = 2 or (m = 3 and (z = 1 or z = 2)) or (m = 4 and z = 1)",
                    "((2m^3 + 2)z - 4m^2 - 2m + 2)/(2m - 1)",
                ),
                case(
                    "(m >= 3 and z >= 3) or (m = 4 and z >= 2) or m >= 5",
                    "((2m^3 - 6m^2 + 4m)z^2 + (2m^2 - 2m + 2)z - 4m + 2)/(2m - 1)",
                ),
            ],
            &[
                case("m = 2", "6z - 6"),
                case("m = 3 and z = 1", "16/5"),
                case("m = 3 and z >= 2", "(12z^2 + 18z - 30)/5"),
                case("m = 4 and z <= 6", "48z^2/7"),
                case("m = 4 and z > 6", "(48z^2 + 8z - 56)/7"),
                case(
                    "m >= 5",
                    "((2m^3 - 6m^2 + 4m)z^2 + (m^3 - 7m^2 + 4m)z - 2m^2 + 3m - 1)/(2m - 1)",
                ),
            ],
        ],
        value_sets: None,
        spectra: Some([DI_A, DI_L, DI_Q]),
        rows: NO_ROWS,
        notes: &[
            "The statement's third LE case reads z >= 3; the derivation's narrative reads z = 3. The statement is stored.",
        ],
    },
    FormulaEntry {
        id: "F5",
        statement: "Corollary: metacyclic groups M_2mn = <a, b : a^m = b^2n = 1, bab^-1 = a^-1>",
        quote: "be a metacyclic group, where m > 2",
        params: &["m", "n"],
        domain: "m > 2 and n >= 1",
        cases: [
            &[case("odd(m)", "(4m - 2)n - 2(m + 1)"), case("even(m)", "(4m - 4)n - (m + 2)")],
            &[
                case("odd(m) and m = 3 and (n = 1 or n = 2)", "(56n - 40)/5"),
                case("odd(m) and m = 3 and n >= 3", "(12n^2 + 14n - 10)/5"),
                case(
                    "odd(m) and m != 3",
                    "((2m^3 - 6m^2 + 4m)n^2 + (2m^2 - 2m + 2)n - 4m + 2)/(2m - 1)",
                ),
                case("even(m) and m = 4", "(16n - 9)/3"),
                case("even(m) and m = 6 and n = 1", "72/5"),
                case("even(m) and m = 6 and n >= 2", "(48n^2 + 28n - 10)/5"),
                case("even(m) and m = 8 and n >= 1", "(192n^2 + 52n - 14)/7"),
                case(
                    "even(m) and m != 4 and m != 6 and m != 8",
                    "((m^3 - 6m^2 + 8m)n^2 + (m^2 - 2m + 4)n - 2m + 2)/(m - 1)",
                ),
            ],
            &[
                case("odd(m) and m = 3 and n = 1", "16/5"),
                case("odd(m) and m = 3 and n >= 2", "(12n^2 + 18n - 30)/5"),
                case(
                    "odd(m) and m != 3",
                    "((2m^3 - 6m^2 + 4m)n^2 + (m^3 - 7m^2 + 4m)n - 2m^2 + 3m - 1)/(2m - 1)",
                ),
                case("even(m) and m = 4", "12n - 6"),
                case("even(m) and m = 6 and n >= 1", "(48n^2 + 36n - 30)/5"),
                case("even(m) and m = 8 and n <= 3", "192n^2/7"),
                case("even(m) and m = 8 and n > 3", "(192n^2 + 16n - 56)/7"),
                case(
                    "even(m) and m != 4 and m != 6 and m != 8",
                    "((4m^3 - 24m^2 + 32m)n^2 + (m^3 - 14m^2 + 16m)n - 2m^2 + 6m - 4)/(4(m - 1))",
                ),
            ],
        ],
        value_sets: None,
        spectra: None,
        rows: NO_ROWS,
        notes: &[],
    },
    FormulaEntry {
        id: "F6",
        statement: "Corollary: dihedral groups D_2m, m > 2",
        quote: "dihedral group of order 2m",
        params: &["m"],
        domain: "m > 2",
        cases: [
            &[case("odd(m)", "2m - 3"), case("even(m)", "3m - 6")],
            &[
                case("odd(m) and m = 3", "16/5"),
                case("odd(m) and m != 3", "2(m + 1)(m - 1)(m - 2)/(2m - 1)"),
                case("even(m) and m = 4", "7/3"),
                case("even(m) and m = 6", "72/5"),
                case("even(m) and m = 8", "230/7"),
                case("even(m) and m != 4 and m != 6 and m != 8", "(m^3 - 5m^2 + 4m + 6)/(m - 1)"),
            ],
            &[
                case("odd(m) and m = 3", "16/5"),
                case("odd(m) and m != 3", "(3m^3 - 15m^2 + 11m - 1)/(2m - 1)"),
                case("even(m) and m = 4", "6"),
                case("even(m) and m = 6", "54/5"),
                case("even(m) and m = 8", "192/7"),
                case("even(m) and m != 4 and m != 6 and m != 8", "(5m^3 - 40m^2 + 42m - 4)/(4(m - 1))"),
            ],
        ],
        value_sets: None,
        spectra: None,
        rows: NO_ROWS,
        notes: &["For odd m the printed E is 2m - 3, while the D_2m-quotient formula at z = 1 gives 2m - 4."],
    },
    FormulaEntry {
        id: "F7",
        statement: "Corollary: generalized quaternion groups Q_4m, m >= 2",
        quote: "generalized quaternion group of order 4m",
        params: &["m"],
        domain: "m >= 2",
        cases: [
            one!("6m - 6"),
            &[
                case("m = 2", "6"),
                case("m = 3", "72/5"),
                case("m = 4", "230/7"),
                case("otherwise", "(8m^3 - 20m^2 + 8m + 6)/(2m - 1)"),
            ],
            &[
                case("m = 2", "6"),
                case("m = 3", "54/5"),
                case("m = 4", "192/7"),
                case("otherwise", "(10m^3 - 40m^2 + 27m - 1)/(2m - 1)"),
            ],
        ],
        value_sets: None,
        spectra: None,
        rows: NO_ROWS,
        notes: &[],
    },
    FormulaEntry {
        id: "F8",
        statement: "Proposition: non-abelian groups of order pq",
        quote: "primes with p | (q - 1)",
        params: &["p", "q"],
        domain: "prime(p) and prime(q) and divides(p, q - 1)",
        cases: [
            one!("2q(p - 1) - 3"),
            &[
                case("p = 2 and q != 3", "q(q^2 - 3q - 3p*q^2 + 1)/(p*q - 1)"),
                case("p = 2 and q = 3", "(2p*q(2p*q - p - q^2 - 3q + 1) + q(5q^2 - 6q + 4))/(p*q - 1)"),
                case("otherwise", "(-2p*q(p*q - 2p - q^2 + 4) - q(3q^2 - 6q + 2) + 4)/(p*q - 1)"),
            ],
            &[
                case("p = 2 and q = 3", "(2p*q(2q - p - 1) - (2q^2 + 3q - 6))/(p*q - 1)"),
                case("otherwise", "(2p^2 q(1 - q) + 2q^3(p - 1) + q(2q - 2p + 1) - 2)/(p*q - 1)"),
            ],
        ],
        value_sets: None,
        spectra: Some([PQ_A, PQ_L, PQ_Q]),
        rows: NO_ROWS,
        notes: &["The printed adjacency multiplicities sum to pq, one more than the pq - 1 vertices."],
    },
    FormulaEntry {
        id: "F9",
        statement: "Proposition: quasidihedral groups QD_2^n",
        quote: "denote the quasidihedral group",
        params: &["n"],
        domain: "n >= 4",
        cases: [
            one!("3(2^(n - 1) - 2)"),
            one!("(2^(3n - 3) - 5*2^(2n - 2) + 4*2^(n - 1) + 12)/(2^(n - 1) - 1)"),
            one!("(5*2^(3n - 4) - 30*2^(2n - 3) + 40*2^(n - 2))/(2^(n - 1) - 1)"),
        ],
        value_sets: None,
        spectra: Some([QD_A, QD_L, QD_Q]),
        rows: NO_ROWS,
        notes: &["The vertex count is printed as 2^(n-1) - 1; the graph 2^(n-2) K_2 + K_(2^(n-1) - 2) has 2^n - 2 vertices."],
    },
    FormulaEntry {
        id: "F10",
        statement: "Proposition: projective special linear groups PSL(2, 2^k), k >= 2",
        quote: "where k >= 2",
        params: &["k"],
        domain: "k >= 2",
        cases: [
            one!("2^(3k + 1) - 2^(2k + 1) - 2^(k + 2) - 4"),
            one!("(2*2^(6k) - 2*2^(5k) - 8*2^(4k) - 6*2^(3k) + 6*2^(2k) + 8*2^k + 4)/(2^(3k) - 2^k - 1)"),
            &[
                case(
                    "k = 2",
                    "(2^(6k) + 2^(5k) - 3*2^(4k) - 7*2^(3k) + 4*2^k + 4)/(2^(3k) - 2^k - 1)",
                ),
                case(
                    "otherwise",
                    "(2*2^(6k) - 2*2^(5k) - 8*2^(4k) - 6*2^(3k) + 6*2^(2k) + 8*2^k + 4)/(2^(3k) - 2^k - 1)",
                ),
            ],
        ],
        value_sets: None,
        spectra: Some([PSL_A, PSL_L, PSL_Q]),
        rows: NO_ROWS,
        notes: &[],
    },
    FormulaEntry {
        id: "F11",
        statement: "Proposition: general linear groups GL(2, q), q = p^n > 2",
        quote: "where q = p^n > 2",
        params: &["q"],
        domain: "prime_power(q) and q > 2",
        cases: [
            one!("(2q^4 - 2q^3 - 8q^2 - 5q)/2"),
            one!("(2q^9 - 6q^8 + 4q^7 + 8q^6 - 10q^5 + 4q^3 + 4q^2 - 8q)/(2(q - 1)(q^3 - q - 1))"),
            one!(
                "(q^10 - 4q^9 + 10q^8 + 3q^7 - 23q^6 - 9q^5 + 22q^4 + 10q^3 - 9q^2 - 4q)/(2(q - 1)(q^3 - q - 1))"
            ),
        ],
        value_sets: None,
        spectra: Some([GL_A, GL_L, GL_Q]),
        rows: NO_ROWS,
        notes: &[],
    },
    FormulaEntry {
        id: "F12a",
        statement: "Proposition: Hanaki groups U(a, b) over GF(2^n), n >= 2",
        quote: "Frobenius automorphism of F",
        params: &["n"],
        domain: "n >= 2",
        cases: [one!("2(2^n - 1)^2"), one!("2(2^n - 1)^2"), one!("2(2^n - 1)^2")],
        value_sets: None,
        spectra: Some([HU_A, HU_L, HU_Q]),
        rows: NO_ROWS,
        notes: &[],
    },
    FormulaEntry {
        id: "F12b",
        statement: "Proposition: Hanaki groups V(a, b, c) over GF(p^n)",
        quote: "V(a, b, c)V(a', b', c')",
        params: &["p", "n"],
        domain: "prime(p) and n >= 1",
        cases: [
            one!("2(p^(3n) - 2p^n - 1)"),
            one!("2(p^(3n) - 2p^n - 1)"),
            one!("2(p^(3n) - 2p^n - 1)"),
        ],
        value_sets: None,
        spectra: Some([HV_A, HV_L, HV_Q]),
        rows: NO_ROWS,
        notes: &[],
    },
    FormulaEntry {
        id: "F13",
        statement: "Theorem: finite 4-centralizer groups",
        quote: "finite 4-centralizer group",
        params: &["z"],
        domain: "z >= 1",
        cases: [one!("6z - 6"), one!("6z - 6"), one!("6z - 6")],
        value_sets: None,
        spectra: None,
        rows: NO_ROWS,
        notes: &[],
    },
    FormulaEntry {
        id: "F14",
        statement: "Corollary: finite (p+2)-centralizer p-groups",
        quote: "(p+2)-centralizer p-group for any prime",
        params: &["p", "z"],
        domain: "prime(p) and z >= 1",
        cases: [
            one!("2(p^2 - 1)z - 2(p + 1)"),
            one!("2(p^2 - 1)z - 2(p + 1)"),
            one!("2(p^2 - 1)z - 2(p + 1)"),
        ],
        value_sets: None,
        spectra: None,
        rows: NO_ROWS,
        notes: &[],
    },
    FormulaEntry {
        id: "F15",
        statement: "Theorem: finite 5-centralizer groups (G/Z(G) is Z_3 x Z_3 or D_6)",
        quote: "finite 5-centralizer group",
        params: &["h", "m", "z"],
        domain: "(h = 9 or (h = 6 and m = 3)) and z >= 1",
        cases: [
            &[case("h = 9", "16z - 8"), case("h = 6", "10z - 8")],
            &[
                case("h = 9", "16z - 8"),
                case("h = 6 and m = 3 and (z = 1 or z = 2)", "(56z - 40)/5"),
                case("otherwise", "(12z^2 + 11z - 10)/5"),
            ],
            &[
                case("h = 9", "16z - 8"),
                case("h = 6 and m = 3 and z = 1", "16/5"),
                case("otherwise", "(12z^2 + 18z - 30)/5"),
            ],
        ],
        value_sets: None,
        spectra: None,
        rows: NO_ROWS,
        notes: &["The D_6 branch prints the LE coefficient 11z; the D_2m-quotient formula at m = 3 gives 14z."],
    },
    FormulaEntry {
        id: "F16",
        statement: "Theorem: Pr(G) = (p^2 + p - 1)/p^3, p the smallest prime divisor of |G|",
        quote: "p the smallest prime divisor",
        params: &["p", "z"],
        domain: "prime(p) and z >= 1",
        cases: [
            one!("2(p^2 - 1)z - 2(p + 1)"),
            one!("2(p^2 - 1)z - 2(p + 1)"),
            one!("2(p^2 - 1)z - 2(p + 1)"),
        ],
        value_sets: None,
        spectra: None,
        rows: NO_ROWS,
        notes: &[],
    },
    FormulaEntry {
        id: "F17",
        statement: "Corollary: Pr(G) = 5/8",
        quote: "Pr(G) = 5/8",
        params: &["z"],
        domain: "z >= 1",
        cases: [one!("6z - 6"), one!("6z - 6"), one!("6z - 6")],
        value_sets: None,
        spectra: None,
        rows: NO_ROWS,
        notes: &[],
    },
    FormulaEntry {
        id: "F18",
        statement: "Theorem: Pr(G) in {5/14, 2/5, 11/27, 1/2}",
        quote: "{5/14, 2/5, 11/27, 1/2}",
        params: &[],
        domain: "true",
        cases: [NONE, NONE, NONE],
        value_sets: Some([
            &["11", "7", "6", "3"],
            &["480/13", "16", "7/3", "16/5"],
            &["370/13", "6", "16/5"],
        ]),
        spectra: None,
        rows: NO_ROWS,
        notes: &["11/27 is the commutativity degree of groups with G/Z(G) = Z_3 x Z_3, which is not dihedral."],
    },
    FormulaEntry {
        id: "F19",
        statement: "Theorem: planar commuting graphs",
        quote: "If Gamma_G is planar",
        params: &[],
        domain: "true",
        cases: [NONE, NONE, NONE],
        value_sets: Some([
            &["3", "6", "7", "12", "18", "26", "30", "76", "17 + 4sqrt(5) + sqrt(17)"],
            &[
                "16/5",
                "7/3",
                "16",
                "18",
                "72/5",
                "6",
                "140/11",
                "504/19",
                "408/11",
                "3924/59",
                "(526 + 46sqrt(13))/23",
            ],
            &["16/5", "6", "54/5", "18", "256/11", "484/19", "312/11", "3844/59", "756/23"],
        ]),
        spectra: None,
        rows: PLANAR_ROWS,
        notes: &[
            "Dihedral rows carry the dihedral corollary's values; the derivation's own LE set lists 7 where the statement lists 16.",
        ],
    },
    FormulaEntry {
        id: "F20",
        statement: "Theorem: toroidal commuting graphs",
        quote: "is toroidal, then",
        params: &[],
        domain: "true",
        cases: [NONE, NONE, NONE],
        value_sets: Some([
            &["11", "18", "42", "25", "22", "34"],
            &["480/13", "230/7", "962/15", "236/7", "103/4", "48", "390/11"],
            &["370/13", "192/7", "185", "480/7", "677/20", "59", "408/11"],
        ]),
        spectra: None,
        rows: TOROIDAL_ROWS,
        notes: &["The D_6 x Z_3 and A_4 x Z_2 rows are printed without a derivation."],
    },
];
