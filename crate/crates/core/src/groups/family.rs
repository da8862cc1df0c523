use std::fmt;
use std::str::FromStr;

use super::FiniteGroup;
use crate::algebra::{
    gl2_enumerate, is_prime, prime_power, sl2_enumerate, FiniteField, Mat3, Permutation, SquareMat,
};
use crate::{Error, Result};

pub const DEFAULT_ORDER_CAP: usize = 2048;

/// A named group family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupFamilySpec {
    Cyclic { n: u64 },
    /// `D_{2m}`, order `2m`.
    Dihedral { m: u64 },
    /// `Q_{4m}`, order `4m`.
    Dicyclic { m: u64 },
    /// `M_{2mn} = <a, b : a^m = b^{2n} = 1, b a b^-1 = a^-1>`.
    Metacyclic { m: u64, n: u64 },
    /// `QD(2^n)`.
    Quasidihedral { n: u64 },
    /// Non-abelian group of order `pq`, `p | q - 1`.
    FrobeniusPq { p: u64, q: u64 },
    /// `<a, b : a^m = b^n = 1, b a b^-1 = a^r>`.
    SplitMetacyclic { m: u64, n: u64, r: u64 },
    Suzuki2,
    /// `SL(2, 2^k) = PSL(2, 2^k)`.
    Psl2 { k: u32 },
    Gl2 { p: u32, n: u32 },
    HanakiU { n: u32 },
    HanakiV { p: u32, n: u32 },
    SymmetricS4,
    AlternatingA4,
    AlternatingA5,
    SpecialLinear23,
    /// `D_8 * Z_4`.
    CentralProductD8Z4,
    /// `SmallGroup(16, 3)`.
    SmallGroup16_3,
    DirectProductWithCyclic { inner: Box<GroupFamilySpec>, k: u64 },
    /// `HanakiV(p, 1) x Z_{z/p}`: center of order `z`, quotient `Z_p x Z_p`.
    ElementaryWitness { p: u64, z: u64 },
}

use GroupFamilySpec as S;

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameters(msg.into()))
}

/// Smallest `t > 1` with multiplicative order `p` modulo `q`.
pub fn frobenius_multiplier(p: u64, q: u64) -> Option<u64> {
    (2..q).find(|&t| {
        let mut x = t % q;
        let mut k = 1;
        while x != 1 {
            x = x * t % q;
            k += 1;
        }
        k == p
    })
}

impl GroupFamilySpec {
    /// Checks the family's parameter domain.
    pub fn validate(&self) -> Result<()> {
        match self {
            S::Cyclic { n } if *n < 1 => invalid("cyclic needs n >= 1"),
            S::Dihedral { m } if *m < 3 => invalid("dihedral needs m >= 3"),
            S::Dicyclic { m } if *m < 2 => invalid("dicyclic needs m >= 2"),
            S::Metacyclic { m, n } if *m <= 2 || *n < 1 => invalid("metacyclic needs m > 2, n >= 1"),
            S::Quasidihedral { n } if *n < 4 => invalid("quasidihedral needs n >= 4"),
            S::FrobeniusPq { p, q } => {
                if !is_prime(*p) || !is_prime(*q) {
                    invalid("pq needs primes p and q")
                } else if (q - 1) % p != 0 {
                    invalid(format!("pq needs p | q - 1, got p={p}, q={q}"))
                } else {
                    Ok(())
                }
            }
            S::SplitMetacyclic { m, n, r } => {
                if *m < 1 || *n < 1 {
                    return invalid("semidirect needs m, n >= 1");
                }
                let mut x = 1 % m;
                for _ in 0..*n {
                    x = x * (r % m) % m;
                }
                if x != 1 % m || num_integer::gcd(*r, *m) != 1 {
                    return invalid(format!("semidirect needs r^n = 1 mod m, got r={r}"));
                }
                Ok(())
            }
            S::Psl2 { k } if *k < 1 => invalid("psl2 needs k >= 1"),
            S::Gl2 { p, n } => {
                if !is_prime(*p as u64) || *n < 1 {
                    invalid("gl2 needs a prime p and n >= 1")
                } else {
                    Ok(())
                }
            }
            S::HanakiU { n } if *n < 1 => invalid("hanakiU needs n >= 1"),
            S::HanakiV { p, n } => {
                if !is_prime(*p as u64) || *n < 1 {
                    invalid("hanakiV needs a prime p and n >= 1")
                } else {
                    Ok(())
                }
            }
            S::DirectProductWithCyclic { inner, k } => {
                if *k < 1 {
                    return invalid("product needs k >= 1");
                }
                inner.validate()
            }
            S::ElementaryWitness { p, z } => {
                if !is_prime(*p) {
                    invalid("elementary needs a prime p")
                } else if *z == 0 || z % p != 0 {
                    invalid(format!("elementary needs p | z, got p={p}, z={z}"))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Group order, computed without building anything (saturating).
    pub fn order(&self) -> u128 {
        let pow = |b: u128, e: u32| b.saturating_pow(e);
        match self {
            S::Cyclic { n } => *n as u128,
            S::Dihedral { m } => 2 * *m as u128,
            S::Dicyclic { m } => 4 * *m as u128,
            S::Metacyclic { m, n } => 2 * (*m as u128) * (*n as u128),
            S::Quasidihedral { n } => pow(2, *n as u32),
            S::FrobeniusPq { p, q } => (*p as u128) * (*q as u128),
            S::SplitMetacyclic { m, n, .. } => (*m as u128) * (*n as u128),
            S::Suzuki2 => 20,
            S::Psl2 { k } => {
                let q = pow(2, *k);
                q.saturating_mul(q.saturating_mul(q)).saturating_sub(q)
            }
            S::Gl2 { p, n } => {
                let q = pow(*p as u128, *n);
                let q2 = q.saturating_mul(q);
                (q2 - 1).saturating_mul(q2 - q)
            }
            S::HanakiU { n } => pow(2, 2 * n),
            S::HanakiV { p, n } => pow(*p as u128, 3 * n),
            S::SymmetricS4 | S::SpecialLinear23 => 24,
            S::AlternatingA4 => 12,
            S::AlternatingA5 => 60,
            S::CentralProductD8Z4 | S::SmallGroup16_3 => 16,
            S::DirectProductWithCyclic { inner, k } => inner.order().saturating_mul(*k as u128),
            S::ElementaryWitness { p, z } => (*p as u128) * (*p as u128) * (*z as u128),
        }
    }

    /// Builds the Cayley table, refusing anything larger than `cap`.
    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        self.validate()?;
        let order = self.order();
        if order > cap as u128 {
            return Err(Error::OrderCapExceeded { order, cap });
        }
        let g = match self {
            S::Cyclic { n } => metacyclic(*n, 1, 1, 0)?,
            S::Dihedral { m } => metacyclic(*m, 2, m - 1, 0)?,
            S::Dicyclic { m } => metacyclic(2 * m, 2, 2 * m - 1, *m)?,
            S::Metacyclic { m, n } => metacyclic(*m, 2 * n, m - 1, 0)?,
            S::Quasidihedral { n } => {
                let big = 1u64 << (n - 1);
                metacyclic(big, 2, big / 2 - 1, 0)?
            }
            S::FrobeniusPq { p, q } => {
                let t = frobenius_multiplier(*p, *q)
                    .ok_or_else(|| Error::InvalidParameters("no multiplier of order p".into()))?;
                metacyclic(*q, *p, t, 0)?
            }
            S::SplitMetacyclic { m, n, r } => metacyclic(*m, *n, r % m, 0)?,
            S::Suzuki2 => metacyclic(5, 4, 3, 0)?,
            S::Psl2 { k } => {
                let f = FiniteField::new(2, *k)?;
                let ms = sl2_enumerate(&f, cap)?;
                FiniteGroup::from_elements(&ms, |a, b| a.mul(b, &f), |m| m.to_string())?
            }
            S::Gl2 { p, n } => {
                let f = FiniteField::new(*p, *n)?;
                let ms = gl2_enumerate(&f, cap)?;
                FiniteGroup::from_elements(&ms, |a, b| a.mul(b, &f), |m| m.to_string())?
            }
            S::SpecialLinear23 => {
                let f = FiniteField::new(3, 1)?;
                let ms = sl2_enumerate(&f, cap)?;
                FiniteGroup::from_elements(&ms, |a, b| a.mul(b, &f), |m| m.to_string())?
            }
            S::HanakiU { n } => hanaki_u(*n)?,
            S::HanakiV { p, n } => hanaki_v(*p, *n)?,
            S::SymmetricS4 => permutations(4, false)?,
            S::AlternatingA4 => permutations(4, true)?,
            S::AlternatingA5 => permutations(5, true)?,
            S::CentralProductD8Z4 => central_product_d8_z4()?,
            S::SmallGroup16_3 => small_group_16_3()?,
            S::DirectProductWithCyclic { inner, k } => direct_product(&inner.build(cap)?, *k)?,
            S::ElementaryWitness { p, z } => {
                direct_product(&hanaki_v(*p as u32, 1)?, z / p)?
            }
        };
        Ok(g.with_family(self.clone()))
    }
}

fn word(i: u64, j: u64) -> String {
    let part = |name: &str, e: u64| match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    };
    let parts: Vec<String> = [part("a", i), part("b", j)].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// `<a, b : a^big = 1, b^small = a^s, b a b^-1 = a^r>` on normal forms `a^i b^j`,
/// element index `i * small + j`.
fn metacyclic(big: u64, small: u64, r: u64, s: u64) -> Result<FiniteGroup> {
    let mut rpow = vec![1 % big; small as usize];
    for j in 1..small as usize {
        rpow[j] = rpow[j - 1] * r % big;
    }
    let order = (big * small) as usize;
    let labels = (0..order as u64).map(|x| word(x / small, x % small)).collect();
    let mul = |x: usize, y: usize| {
        let (i, j) = (x as u64 / small, x as u64 % small);
        let (k, l) = (y as u64 / small, y as u64 % small);
        let mut e = i + k * rpow[j as usize];
        let mut f = j + l;
        if f >= small {
            f -= small;
            e += s;
        }
        ((e % big) * small + f) as usize
    };
    FiniteGroup::from_fn(order, mul, labels)
}

fn hanaki_u(n: u32) -> Result<FiniteGroup> {
    let f = FiniteField::new(2, n)?;
    let q = f.order();
    let elems: Vec<Mat3> = (0..q * q)
        .map(|t| {
            let (a, b) = (t / q, t % q);
            SquareMat([[1, 0, 0], [a, 1, 0], [b, f.frobenius(a), 1]])
        })
        .collect();
    FiniteGroup::from_elements(&elems, |x, y| x.mul(y, &f), |m| {
        format!("U({},{})", m.0[1][0], m.0[2][0])
    })
}

fn hanaki_v(p: u32, n: u32) -> Result<FiniteGroup> {
    let f = FiniteField::new(p, n)?;
    let q = f.order();
    let elems: Vec<Mat3> = (0..q * q * q)
        .map(|t| {
            let (a, b, c) = (t / (q * q), (t / q) % q, t % q);
            SquareMat([[1, 0, 0], [a, 1, 0], [b, c, 1]])
        })
        .collect();
    FiniteGroup::from_elements(&elems, |x, y| x.mul(y, &f), |m| {
        format!("V({},{},{})", m.0[1][0], m.0[2][0], m.0[2][1])
    })
}

fn permutations(n: usize, even_only: bool) -> Result<FiniteGroup> {
    let elems: Vec<Permutation> = Permutation::all(n)
        .into_iter()
        .filter(|p| !even_only || p.is_even())
        .collect();
    FiniteGroup::from_elements(&elems, |x, y| x.compose(y), |p| p.to_string())
}

fn labeled(parts: &[(&str, u64)]) -> String {
    let words: Vec<String> = parts
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(name, e)| if *e == 1 { name.to_string() } else { format!("{name}^{e}") })
        .collect();
    if words.is_empty() {
        "1".into()
    } else {
        words.join(" ")
    }
}

/// `a^4 = b^2 = c^2 = 1`, `a` central, `bc = a^2 cb`; index `4i + 2j + k`
/// for `a^i b^j c^k`.
fn central_product_d8_z4() -> Result<FiniteGroup> {
    let split = |x: usize| ((x / 4) as u64, ((x / 2) % 2) as u64, (x % 2) as u64);
    let labels = (0..16).map(|x| {
        let (i, j, k) = split(x);
        labeled(&[("a", i), ("b", j), ("c", k)])
    });
    FiniteGroup::from_fn(
        16,
        |x, y| {
            let ((i, j, k), (i2, j2, k2)) = (split(x), split(y));
            // c^k b^j2 = a^(2 k j2) b^j2 c^k
            let e = (i + i2 + 2 * k * j2) % 4;
            (4 * e + 2 * ((j + j2) % 2) + (k + k2) % 2) as usize
        },
        labels.collect(),
    )
}

/// `(Z_4 x Z_2) : Z_2` with `a^4 = b^2 = c^2 = 1`, `ab = ba`, `bc = cb`,
/// `c a c = a b`; index `4i + 2j + k` for `a^i b^j c^k`.
fn small_group_16_3() -> Result<FiniteGroup> {
    let split = |x: usize| ((x / 4) as u64, ((x / 2) % 2) as u64, (x % 2) as u64);
    let labels = (0..16).map(|x| {
        let (i, j, k) = split(x);
        labeled(&[("a", i), ("b", j), ("c", k)])
    });
    FiniteGroup::from_fn(
        16,
        |x, y| {
            let ((i, j, k), (i2, j2, k2)) = (split(x), split(y));
            // c^k a^i2 = a^i2 b^(k i2) c^k
            let e = (i + i2) % 4;
            (4 * e + 2 * ((j + j2 + k * i2) % 2) + (k + k2) % 2) as usize
        },
        labels.collect(),
    )
}

/// `G x Z_k` with index `g * k + c`.
fn direct_product(g: &FiniteGroup, k: u64) -> Result<FiniteGroup> {
    let k = k as usize;
    if k == 1 {
        return Ok(g.clone());
    }
    let order = g.order() * k;
    let labels = (0..order)
        .map(|x| format!("({}, {})", g.label(x / k), x % k))
        .collect();
    FiniteGroup::from_fn(
        order,
        |x, y| g.mul(x / k, y / k) * k + (x % k + y % k) % k,
        labels,
    )
}

impl fmt::Display for GroupFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            S::Cyclic { n } => write!(f, "cyclic:n={n}"),
            S::Dihedral { m } => write!(f, "dihedral:m={m}"),
            S::Dicyclic { m } => write!(f, "dicyclic:m={m}"),
            S::Metacyclic { m, n } => write!(f, "metacyclic:m={m},n={n}"),
            S::Quasidihedral { n } => write!(f, "quasidihedral:n={n}"),
            S::FrobeniusPq { p, q } => write!(f, "pq:p={p},q={q}"),
            S::SplitMetacyclic { m, n, r } => write!(f, "semidirect:m={m},n={n},r={r}"),
            S::Suzuki2 => write!(f, "suzuki2"),
            S::Psl2 { k } => write!(f, "psl2:k={k}"),
            S::Gl2 { p, n } => write!(f, "gl2:p={p},n={n}"),
            S::HanakiU { n } => write!(f, "hanakiU:n={n}"),
            S::HanakiV { p, n } => write!(f, "hanakiV:p={p},n={n}"),
            S::SymmetricS4 => write!(f, "s4"),
            S::AlternatingA4 => write!(f, "a4"),
            S::AlternatingA5 => write!(f, "a5"),
            S::SpecialLinear23 => write!(f, "sl23"),
            S::CentralProductD8Z4 => write!(f, "d8z4"),
            S::SmallGroup16_3 => write!(f, "sg16_3"),
            S::DirectProductWithCyclic { inner, k } => write!(f, "product:inner={inner},k={k}"),
            S::ElementaryWitness { p, z } => write!(f, "elementary:p={p},z={z}"),
        }
    }
}

struct Params<'a> {
    input: &'a str,
    pairs: Vec<(String, String)>,
}

impl Params<'_> {
    fn get<T: FromStr>(&self, key: &str) -> Result<T> {
        let value = self
            .pairs
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v)
            .ok_or_else(|| Error::parse(self.input, format!("missing parameter `{key}`")))?;
        value
            .parse()
            .map_err(|_| Error::parse(self.input, format!("bad value for `{key}`: {value}")))
    }

    fn has(&self, key: &str) -> bool {
        self.pairs.iter().any(|(k, _)| k == key)
    }

    fn expect_keys(&self, allowed: &[&str]) -> Result<()> {
        match self.pairs.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            Some((k, _)) => Err(Error::parse(self.input, format!("unexpected parameter `{k}`"))),
            None => Ok(()),
        }
    }
}

impl FromStr for GroupFamilySpec {
    type Err = Error;

    /// Parses descriptors such as `dihedral:m=6`, `gl2:p=3,n=1`,
    /// `product:inner=suzuki2,k=3`. Family names are case-insensitive.
    fn from_str(input: &str) -> Result<Self> {
        let text = input.trim();
        let (name, rest) = text.split_once(':').unwrap_or((text, ""));
        let name = name.trim().to_ascii_lowercase();
        if name == "product" {
            let body = rest
                .trim()
                .strip_prefix("inner=")
                .ok_or_else(|| Error::parse(input, "product needs inner=<descriptor>,k=<n>"))?;
            let (inner, k) = body
                .rsplit_once(",k=")
                .ok_or_else(|| Error::parse(input, "product needs k=<n>"))?;
            let k = k
                .trim()
                .parse()
                .map_err(|_| Error::parse(input, "bad value for `k`"))?;
            let spec = S::DirectProductWithCyclic {
                inner: Box::new(inner.parse()?),
                k,
            };
            spec.validate()?;
            return Ok(spec);
        }
        let mut pairs = Vec::new();
        for item in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::parse(input, format!("expected key=value, got `{item}`")))?;
            pairs.push((k.trim().to_string(), v.trim().to_string()));
        }
        let p = Params { input, pairs };
        let keys = |allowed: &[&str]| p.expect_keys(allowed);
        let spec = match name.as_str() {
            "cyclic" => {
                keys(&["n"])?;
                S::Cyclic { n: p.get("n")? }
            }
            "dihedral" => {
                keys(&["m"])?;
                S::Dihedral { m: p.get("m")? }
            }
            "dicyclic" | "quaternion" => {
                keys(&["m"])?;
                S::Dicyclic { m: p.get("m")? }
            }
            "metacyclic" => {
                keys(&["m", "n"])?;
                S::Metacyclic { m: p.get("m")?, n: p.get("n")? }
            }
            "quasidihedral" => {
                keys(&["n"])?;
                S::Quasidihedral { n: p.get("n")? }
            }
            "pq" | "frobenius" => {
                keys(&["p", "q"])?;
                S::FrobeniusPq { p: p.get("p")?, q: p.get("q")? }
            }
            "semidirect" => {
                keys(&["m", "n", "r"])?;
                S::SplitMetacyclic { m: p.get("m")?, n: p.get("n")?, r: p.get("r")? }
            }
            "m16" => {
                keys(&[])?;
                S::SplitMetacyclic { m: 8, n: 2, r: 5 }
            }
            "z4z4" => {
                keys(&[])?;
                S::SplitMetacyclic { m: 4, n: 4, r: 3 }
            }
            "suzuki2" | "sz2" => {
                keys(&[])?;
                S::Suzuki2
            }
            "psl2" => {
                keys(&["k"])?;
                S::Psl2 { k: p.get("k")? }
            }
            "gl2" => {
                if p.has("q") {
                    keys(&["q"])?;
                    let q: u64 = p.get("q")?;
                    let (pp, n) = prime_power(q)
                        .ok_or_else(|| Error::parse(input, format!("{q} is not a prime power")))?;
                    S::Gl2 { p: pp, n }
                } else {
                    keys(&["p", "n"])?;
                    S::Gl2 { p: p.get("p")?, n: p.get("n")? }
                }
            }
            "hanakiu" => {
                keys(&["n"])?;
                S::HanakiU { n: p.get("n")? }
            }
            "hanakiv" => {
                keys(&["p", "n"])?;
                S::HanakiV { p: p.get("p")?, n: p.get("n")? }
            }
            "s4" => {
                keys(&[])?;
                S::SymmetricS4
            }
            "a4" => {
                keys(&[])?;
                S::AlternatingA4
            }
            "a5" => {
                keys(&[])?;
                S::AlternatingA5
            }
            "sl23" => {
                keys(&[])?;
                S::SpecialLinear23
            }
            "d8z4" => {
                keys(&[])?;
                S::CentralProductD8Z4
            }
            "sg16_3" => {
                keys(&[])?;
                S::SmallGroup16_3
            }
            "elementary" => {
                keys(&["p", "z"])?;
                S::ElementaryWitness { p: p.get("p")?, z: p.get("z")? }
            }
            _ => return Err(Error::parse(input, format!("unknown group family `{name}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}
