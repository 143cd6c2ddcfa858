//! Step-by-step replay of the worked examples on the symbolic families.

use serde::{Deserialize, Serialize};

use super::{Status, SymElem, SymEngine, SymIdeal, SymRing};
use crate::error::{Error, Result};

/// Registered example ids, in replay order.
pub const EXAMPLE_IDS: [&str; 5] =
    ["example2", "example_exp", "example_edelta", "colon_example", "product_counterexample"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayStep {
    pub claim: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Replay {
    pub id: String,
    pub steps: Vec<ReplayStep>,
    pub passed: bool,
}

impl Replay {
    pub fn transcript(&self) -> String {
        let mut out = format!("{}: {}\n", self.id, if self.passed { "pass" } else { "FAIL" });
        for s in &self.steps {
            out.push_str(&format!("  [{}] {}", if s.ok { "ok" } else { "FAIL" }, s.claim));
            if let Some(e) = &s.error {
                out.push_str(&format!(" ({e})"));
            }
            out.push('\n');
        }
        out
    }
}

struct Steps(Vec<ReplayStep>);

impl Steps {
    fn check(&mut self, claim: impl Into<String>, f: impl FnOnce() -> Result<bool>) {
        let (ok, error) = match f() {
            Ok(b) => (b, None),
            Err(e) => (false, Some(e.to_string())),
        };
        self.0.push(ReplayStep { claim: claim.into(), ok, error });
    }
}

type E = SymElem<i64>;
type I = SymIdeal<i64>;

fn canonical_id(id: &str) -> Option<&'static str> {
    match id {
        "example2" => Some("example2"),
        "example_exp" | "exp" => Some("example_exp"),
        "example_edelta" | "edelta" => Some("example_edelta"),
        "colon_example" => Some("colon_example"),
        "product_counterexample" => Some("product_counterexample"),
        _ => None,
    }
}

impl SymEngine {
    fn refuted_with(&self, v: &super::BoundedVerdict<i64>, w: &[E]) -> bool {
        v.status == Status::RefutedWithWitness && v.witness.as_deref() == Some(w)
    }

    /// Replays one example's arithmetic and membership claims.
    pub fn replay_example(&self, id: &str) -> Result<Replay> {
        let id = canonical_id(id).ok_or_else(|| Error::UnknownExample(id.to_string()))?;
        let mut s = Steps(Vec::new());
        match id {
            "example2" => {
                let r = SymRing::ZIdealizationZ;
                let i = r.homogeneous(0, 2)?;
                let full: I = r.homogeneous(0, 1)?;
                let (a, b) = (E::Pair(2, 0), E::Pair(0, 1));
                s.check("J(Z(+)Z) = 0(+)Z", || Ok(self.sym_jacobson::<i64>(r) == full));
                s.check("0(+)Z is a J-ideal", || Ok(self.sym_classify(r, &full, "j_ideal")?.holds()));
                s.check("rad(0(+)2Z) = 0(+)Z", || Ok(self.sym_radical(r, &i)? == full));
                s.check("0(+)2Z is a quasi J-ideal", || {
                    Ok(self.sym_classify(r, &i, "quasi_j")?.status == Status::ProvenByRule)
                });
                s.check("(2,0)(0,1) = (0,2)", || Ok(r.mul(&a, &b) == E::Pair(0, 2)));
                s.check("(0,2) in 0(+)2Z", || Ok(r.contains(&i, &E::Pair(0, 2))));
                s.check("(2,0) not in J(R)", || Ok(!r.contains(&self.sym_jacobson(r), &a)));
                s.check("(0,1) not in 0(+)2Z", || Ok(!r.contains(&i, &b)));
                s.check("0(+)2Z is not a J-ideal, witness ((2,0),(0,1))", || {
                    Ok(self.refuted_with(&self.sym_classify(r, &i, "j_ideal")?, &[a.clone(), b.clone()]))
                });
            }
            "example_exp" => {
                let r = SymRing::ZIdealization(2);
                let (a, b) = (E::Pair(0, 1), E::Pair(3, 1));
                s.check("(0,1)(3,1) = (0,1)", || Ok(r.mul(&a, &b) == a));
                s.check("(0,1) and (3,1) are nonzero", || Ok(!r.is_zero(&a) && !r.is_zero(&b)));
                s.check("(0,1) and (3,1) are not units", || {
                    Ok(!self.sym_units_contains(r, &a)? && !self.sym_units_contains(r, &b)?)
                });
                s.check("N(Z(+)Z2) = 0(+)Z2", || Ok(self.sym_nilradical::<i64>(r) == r.homogeneous(0, 1)?));
                s.check("Z(+)Z2 is quasi presimplifiable", || {
                    Ok(self.sym_ring_classify::<i64>(r, "quasi_presimplifiable")?.status == Status::ProvenByRule)
                });
                s.check("Z(+)Z2 is not presimplifiable, witness ((0,1),(3,1))", || {
                    Ok(self.refuted_with(&self.sym_ring_classify(r, "presimplifiable")?, &[a.clone(), b.clone()]))
                });
            }
            "example_edelta" => {
                let r = SymRing::ZLocal(2);
                let i = I::LocalPower(1);
                let a = r.frac(2, 3)?;
                let b = r.frac(3, 5)?;
                s.check("Z_(2) is quasi-local", || Ok(self.sym_ring_classify::<i64>(r, "quasi_local")?.holds()));
                s.check("J(Z_(2)) = <2>", || Ok(self.sym_jacobson::<i64>(r) == i));
                s.check("<2> is a quasi J-ideal", || Ok(self.sym_classify(r, &i, "quasi_j")?.holds()));
                s.check("2/3 * 3/5 = 6/15", || Ok(r.mul(&a, &b) == r.frac(6, 15)?));
                s.check("6/15 in <2>", || Ok(r.contains(&i, &r.frac(6, 15)?)));
                s.check("2/3 is not nilpotent", || Ok(!r.contains(&self.sym_nilradical(r), &a)));
                s.check("rad<2> = <2>", || Ok(self.sym_radical(r, &i)? == i));
                s.check("3/5 not in <2>", || Ok(!r.contains(&i, &b)));
                s.check("<2> is not a delta1-n-ideal, witness (2/3, 3/5)", || {
                    Ok(self.refuted_with(&self.sym_classify(r, &i, "delta1_n")?, &[a.clone(), b.clone()]))
                });
            }
            "colon_example" => {
                let r = SymRing::Z;
                let i = I::Principal(12);
                let two = E::Int(2);
                s.check("(<12> : 2) = <6>", || Ok(self.sym_colon(r, &i, &two)? == I::Principal(6)));
                s.check("rad(<12> : 2) = <6>", || {
                    Ok(self.sym_radical(r, &self.sym_colon(r, &i, &two)?)? == I::Principal(6))
                });
                s.check("rad<12> = <6>", || Ok(self.sym_radical(r, &i)? == I::Principal(6)));
                s.check("(rad<12> : 2) = <3>", || {
                    Ok(self.sym_colon(r, &self.sym_radical(r, &i)?, &two)? == I::Principal(3))
                });
                s.check("rad(<12> : 2) != (rad<12> : 2)", || {
                    Ok(self.sym_radical(r, &self.sym_colon(r, &i, &two)?)?
                        != self.sym_colon(r, &self.sym_radical(r, &i)?, &two)?)
                });
            }
            "product_counterexample" => {
                let r = SymRing::ZIdealization(2);
                let k = r.homogeneous(0, 1)?;
                let zero: I = r.zero_ideal();
                let (a, b) = (E::Pair(2, 0), E::Pair(0, 1));
                s.check("0(+)Z2 is a J-ideal", || Ok(self.sym_classify(r, &k, "j_ideal")?.holds()));
                s.check("(0(+)Z2)(0(+)Z2) = 0(+)0", || Ok(r.ideal_product(&k, &k)? == zero));
                s.check("(2,0)(0,1) = (0,0)", || Ok(r.is_zero(&r.mul(&a, &b))));
                s.check("(2,0) not in J(R) = 0(+)Z2", || {
                    let j = self.sym_jacobson::<i64>(r);
                    Ok(j == k && !r.contains(&j, &a))
                });
                s.check("(0,1) not in 0(+)0", || Ok(!r.contains(&zero, &b)));
                s.check("0(+)0 is not a J-ideal, witness ((2,0),(0,1))", || {
                    Ok(self.refuted_with(&self.sym_classify(r, &zero, "j_ideal")?, &[a.clone(), b.clone()]))
                });
            }
            _ => unreachable!("ids are canonicalized above"),
        }
        let passed = s.0.iter().all(|st| st.ok);
        Ok(Replay { id: id.to_string(), steps: s.0, passed })
    }
}

/// Replays one example with the default engine.
pub fn replay_example(id: &str) -> Result<Replay> {
    SymEngine::default().replay_example(id)
}
