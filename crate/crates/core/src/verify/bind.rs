//! Hypothesis checks: decide whether a formula applies to a concrete group and
//! bind its parameters from the group's computed structure.

use num_rational::BigRational;

use crate::algebra::is_prime;
use crate::formulas::{lookup, Params};
use crate::groups::{FiniteGroup, GroupFamilySpec, QuotientTag};
use crate::rational::ratio;
use crate::{Error, Result};

fn inapplicable<T>(id: &str, reason: impl Into<String>) -> Result<T> {
    Err(Error::Inapplicable { id: id.to_string(), reason: reason.into() })
}

fn smallest_prime_divisor(n: u64) -> u64 {
    (2..=n).find(|d| n % d == 0).unwrap_or(n)
}

/// `p` when `n = p^e` for a prime `p` and `e >= 1`.
fn prime_base(n: u64) -> Option<(u64, u32)> {
    let p = smallest_prime_divisor(n);
    if n < 2 || !is_prime(p) {
        return None;
    }
    let (mut m, mut e) = (n, 0);
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

/// Parameters for `id` on `group`, after confirming the printed hypothesis
/// holds computationally.
pub fn bind(id: &str, spec: &GroupFamilySpec, group: &FiniteGroup) -> Result<Params> {
    let entry = lookup(id)?;
    let id = entry.id;
    let z = group.center().len() as i64;
    let order = group.order() as u64;
    if group.is_abelian() {
        return Err(Error::AbelianGroup);
    }
    let params = Params::new();
    let bound = match id {
        "F1" => match group.recognize_quotient() {
            QuotientTag::Suzuki2 => params.with("z", z),
            _ => return inapplicable(id, "G/Z(G) is not Sz(2)"),
        },
        "F2" => match group.recognize_quotient() {
            QuotientTag::ElemAbelianPSquared(p) => params.with("p", p as i64).with("z", z),
            _ => return inapplicable(id, "G/Z(G) is not Z_p x Z_p"),
        },
        "F3" => match prime_base(order) {
            Some((p, 3)) => params.with("p", p as i64),
            _ => return inapplicable(id, format!("order {order} is not a prime cube")),
        },
        "F4" => match group.recognize_quotient() {
            QuotientTag::Dihedral(m) => params.with("m", m as i64).with("z", z),
            QuotientTag::ElemAbelianPSquared(2) => params.with("m", 2).with("z", z),
            _ => return inapplicable(id, "G/Z(G) is not dihedral"),
        },
        "F5" => match spec {
            GroupFamilySpec::Metacyclic { m, n } => params.with("m", *m as i64).with("n", *n as i64),
            _ => return inapplicable(id, "not a metacyclic M_2mn"),
        },
        "F6" => match spec {
            GroupFamilySpec::Dihedral { m } => params.with("m", *m as i64),
            _ => return inapplicable(id, "not a dihedral group"),
        },
        "F7" => match spec {
            GroupFamilySpec::Dicyclic { m } => params.with("m", *m as i64),
            _ => return inapplicable(id, "not a generalized quaternion group"),
        },
        "F8" => match spec {
            GroupFamilySpec::FrobeniusPq { p, q } => params.with("p", *p as i64).with("q", *q as i64),
            _ => return inapplicable(id, "not a non-abelian group of order pq"),
        },
        "F9" => match spec {
            GroupFamilySpec::Quasidihedral { n } => params.with("n", *n as i64),
            _ => return inapplicable(id, "not a quasidihedral group"),
        },
        "F10" => match spec {
            GroupFamilySpec::Psl2 { k } => params.with("k", *k as i64),
            GroupFamilySpec::AlternatingA5 => params.with("k", 2),
            _ => return inapplicable(id, "not PSL(2, 2^k)"),
        },
        "F11" => match spec {
            GroupFamilySpec::Gl2 { p, n } => params.with("q", (*p as i64).pow(*n)),
            _ => return inapplicable(id, "not GL(2, q)"),
        },
        "F12a" => match spec {
            GroupFamilySpec::HanakiU { n } => params.with("n", *n as i64),
            _ => return inapplicable(id, "not a Hanaki U group"),
        },
        "F12b" => match spec {
            GroupFamilySpec::HanakiV { p, n } => params.with("p", *p as i64).with("n", *n as i64),
            _ => return inapplicable(id, "not a Hanaki V group"),
        },
        "F13" => {
            let c = group.centralizer_count();
            if c != 4 {
                return inapplicable(id, format!("{c} centralizers, not 4"));
            }
            params.with("z", z)
        }
        "F14" => {
            let Some((p, _)) = prime_base(order) else {
                return inapplicable(id, "not a p-group");
            };
            let c = group.centralizer_count() as u64;
            if c != p + 2 {
                return inapplicable(id, format!("{c} centralizers, not p + 2 = {}", p + 2));
            }
            params.with("p", p as i64).with("z", z)
        }
        "F15" => {
            let c = group.centralizer_count();
            if c != 5 {
                return inapplicable(id, format!("{c} centralizers, not 5"));
            }
            let h = (order / z as u64) as i64;
            let params = params.with("h", h).with("z", z);
            if h == 6 {
                params.with("m", 3)
            } else {
                params
            }
        }
        "F16" => {
            let p = smallest_prime_divisor(order);
            let want = BigRational::new((p * p + p - 1).into(), (p * p * p).into());
            if group.commutativity_degree() != want {
                return inapplicable(id, format!("Pr(G) is not (p^2 + p - 1)/p^3 for p = {p}"));
            }
            params.with("p", p as i64).with("z", z)
        }
        "F17" => {
            if group.commutativity_degree() != ratio(5, 8) {
                return inapplicable(id, "Pr(G) is not 5/8");
            }
            params.with("z", z)
        }
        "F18" => {
            let pr = group.commutativity_degree();
            let set = [ratio(5, 14), ratio(2, 5), ratio(11, 27), ratio(1, 2)];
            if !set.contains(&pr) {
                return inapplicable(id, format!("Pr(G) = {pr} is outside the printed set"));
            }
            params
        }
        "F19" | "F20" => {
            if entry.row_for(spec).is_none() {
                return inapplicable(id, format!("no printed row for {spec}"));
            }
            params.with_group(spec.clone())
        }
        _ => return inapplicable(id, "no hypothesis check"),
    };
    Ok(bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(d: &str) -> (GroupFamilySpec, FiniteGroup) {
        let s: GroupFamilySpec = d.parse().unwrap();
        let g = s.build(2048).unwrap();
        (s, g)
    }

    #[test]
    fn quotient_hypotheses() {
        let (s, grp) = g("product:inner=suzuki2,k=2");
        assert_eq!(bind("F1", &s, &grp).unwrap(), Params::new().with("z", 2));
        let (s, grp) = g("elementary:p=3,z=6");
        assert_eq!(bind("F2", &s, &grp).unwrap(), Params::new().with("p", 3).with("z", 6));
        let (s, grp) = g("dicyclic:m=3");
        assert_eq!(bind("F4", &s, &grp).unwrap(), Params::new().with("m", 3).with("z", 2));
        let (s, grp) = g("dihedral:m=4");
        assert_eq!(bind("F4", &s, &grp).unwrap(), Params::new().with("m", 2).with("z", 2));
        assert!(bind("F1", &s, &grp).is_err());
    }

    #[test]
    fn centralizer_and_degree_hypotheses() {
        let (s, d8) = g("dihedral:m=4");
        assert_eq!(bind("F13", &s, &d8).unwrap(), Params::new().with("z", 2));
        assert_eq!(bind("F17", &s, &d8).unwrap(), Params::new().with("z", 2));
        assert_eq!(bind("F16", &s, &d8).unwrap(), Params::new().with("p", 2).with("z", 2));
        let (s, d6) = g("dihedral:m=3");
        assert_eq!(
            bind("F15", &s, &d6).unwrap(),
            Params::new().with("h", 6).with("m", 3).with("z", 1)
        );
        assert!(bind("F13", &s, &d6).is_err());
        assert!(bind("F18", &s, &d6).is_ok());
        let (s, v) = g("hanakiV:p=3,n=1");
        assert_eq!(bind("F14", &s, &v).unwrap(), Params::new().with("p", 3).with("z", 3));
        assert_eq!(bind("F15", &s, &v).unwrap(), Params::new().with("h", 9).with("z", 3));
        assert_eq!(bind("F3", &s, &v).unwrap(), Params::new().with("p", 3));
    }

    #[test]
    fn rows_and_families() {
        let (s, a5) = g("a5");
        assert_eq!(bind("F10", &s, &a5).unwrap(), Params::new().with("k", 2));
        assert!(bind("F19", &s, &a5).unwrap().group.is_some());
        assert!(bind("F20", &s, &a5).is_err());
        let (s, c) = g("cyclic:n=6");
        assert!(bind("F2", &s, &c).is_err());
    }
}
