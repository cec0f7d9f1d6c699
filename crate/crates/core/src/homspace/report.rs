//! JSON and human renderings of classification results.
//!
//! JSON objects are key-sorted (the default serde_json map is a BTreeMap)
//! and every rational is rendered as `"a/b"`.

use super::{
    Certificate, Classification, ComplexVariant, ExceptionalKind, Family, FamilyKind, MixedKind,
    StandardKind,
};
use crate::chars::{render_charfx, Rat};
use serde_json::{json, Value};

/// `a/b` rendering used for every rational in JSON reports.
pub fn rat_str(r: Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn family_name(f: &Family) -> &'static str {
    match f {
        Family::Standard(StandardKind::Identity) => "Standard/Identity",
        Family::Standard(StandardKind::KnappStein) => "Standard/KnappStein",
        Family::Mixed(MixedKind::Rank1 { .. }) => "Mixed/Rank1",
        Family::Mixed(MixedKind::Radon { .. }) => "Mixed/Radon",
        Family::Exceptional(ExceptionalKind::RealCapelli { .. }) => "Exceptional/RealCapelli",
        Family::Exceptional(ExceptionalKind::ComplexCapelli { .. }) => {
            "Exceptional/ComplexCapelli"
        }
    }
}

pub fn family_kind_name(k: FamilyKind) -> &'static str {
    match k {
        FamilyKind::Standard => "Standard",
        FamilyKind::Mixed => "Mixed",
        FamilyKind::Exceptional => "Exceptional",
    }
}

/// Construction label tied to the certificate, e.g. `mix2-case-a`.
pub fn reference(f: &Family) -> String {
    match f {
        Family::Standard(StandardKind::Identity) => "std".to_string(),
        Family::Standard(StandardKind::KnappStein) => "KnSt".to_string(),
        Family::Mixed(MixedKind::Rank1 { .. }) => "mix1".to_string(),
        Family::Mixed(MixedKind::Radon { case, .. }) => format!("mix2-case-{}", case.letter()),
        Family::Exceptional(ExceptionalKind::RealCapelli { .. }) => "exc1".to_string(),
        Family::Exceptional(ExceptionalKind::ComplexCapelli { .. }) => "exc2".to_string(),
    }
}

fn params_json(f: &Family) -> Value {
    match f {
        Family::Standard(_) => json!({}),
        Family::Mixed(MixedKind::Rank1 { i, j, k }) => json!({ "i": i, "j": j, "k": k }),
        Family::Mixed(MixedKind::Radon { case, i, j, k }) => {
            json!({ "case": case.letter().to_string(), "i": i, "j": j, "k": k })
        }
        Family::Exceptional(ExceptionalKind::RealCapelli { k, i }) => json!({ "i": i, "k": k }),
        Family::Exceptional(ExceptionalKind::ComplexCapelli { variant, k, i, j }) => json!({
            "i": i,
            "j": j,
            "k": k,
            "variant": match variant { ComplexVariant::One => 1, ComplexVariant::Two => 2 },
        }),
    }
}

pub fn classification_json(c: &Classification) -> Value {
    match &c.certificate {
        Certificate::Member { family, twist } => json!({
            "dim": 1,
            "family": family_name(family),
            "params": params_json(family),
            "reference": reference(family),
            "twist": render_charfx(twist),
        }),
        Certificate::NoFamily { reason } => json!({
            "dim": 0,
            "reason": reason.as_str(),
        }),
    }
}

fn operator_description(f: &Family) -> String {
    match f {
        Family::Standard(StandardKind::Identity) => "scalar operator (std)".to_string(),
        Family::Standard(StandardKind::KnappStein) => {
            "Knapp-Stein cosine transform (KnSt)".to_string()
        }
        Family::Mixed(MixedKind::Rank1 { .. }) => {
            "rank-one composition through a character (mix1)".to_string()
        }
        Family::Mixed(MixedKind::Radon { case, .. }) => {
            format!("Radon transform (mix2 case {})", case.letter())
        }
        Family::Exceptional(ExceptionalKind::RealCapelli { .. }) => {
            "Capelli-type differential operator det(d)^i (exc1)".to_string()
        }
        Family::Exceptional(ExceptionalKind::ComplexCapelli { .. }) => {
            "Capelli-type differential operator (exc2)".to_string()
        }
    }
}

pub fn human_line(c: &Classification) -> String {
    match &c.certificate {
        Certificate::Member { family, twist } => {
            let params = params_json(family);
            format!(
                "dim 1: {} with params {} at twist {}",
                operator_description(family),
                params,
                render_charfx(twist)
            )
        }
        Certificate::NoFamily { reason } => format!("dim 0 ({})", reason.as_str()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::FieldSpec;
    use crate::homspace::{NoFamilyReason, RadonCase};

    #[test]
    fn json_shapes() {
        let f = FieldSpec::real();
        let c = Classification::member(
            Family::Mixed(MixedKind::Radon {
                case: RadonCase::A,
                i: 1,
                j: 2,
                k: 3,
            }),
            f.nu(Rat::new(1, 4)),
        );
        let v = classification_json(&c);
        assert_eq!(v["dim"], 1);
        assert_eq!(v["family"], "Mixed/Radon");
        assert_eq!(v["reference"], "mix2-case-a");
        assert_eq!(v["params"]["case"], "a");
        assert_eq!(v["twist"], "nu^{1/4}");

        let z = Classification::no_family(NoFamilyReason::CentralConstraintFailed);
        let v = classification_json(&z);
        assert_eq!(v["dim"], 0);
        assert_eq!(v["reason"], "central-constraint-failed");
    }

    #[test]
    fn keys_are_sorted() {
        let c = Classification::member(
            Family::Standard(StandardKind::Identity),
            FieldSpec::real().trivial_char(),
        );
        let text = serde_json::to_string(&classification_json(&c)).unwrap();
        let dim = text.find("\"dim\"").unwrap();
        let fam = text.find("\"family\"").unwrap();
        let par = text.find("\"params\"").unwrap();
        let rf = text.find("\"reference\"").unwrap();
        let tw = text.find("\"twist\"").unwrap();
        assert!(dim < fam && fam < par && par < rf && rf < tw);
    }
}
