mod support;

use illoc::json::{DocumentJson, FormulaJson, HyperJson, ValuationJson};
use illoc_core::hyper::{all_values, nonstandard_values};
use illoc_core::syntax::{parse, Formula};
use illoc_core::{AlgebraSpec, Element, HyperValue, MbMode, MbValuation, Representative};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use support::gen::FormulaGen;

fn through<T: serde::Serialize + serde::de::DeserializeOwned>(x: &T) -> T {
    serde_json::from_str(&serde_json::to_string(x).unwrap()).unwrap()
}

#[test]
fn hyper_values() {
    let alg = AlgebraSpec::letters(3).unwrap();
    for h in all_values(&alg) {
        let j = HyperJson::from_value(&alg, h);
        assert_eq!(through(&j).to_value(&alg).unwrap(), h);
    }
    let std_form: HyperJson = serde_json::from_str(r#"{"standard":["a","c"]}"#).unwrap();
    assert_eq!(std_form.to_value(&alg).unwrap(), HyperValue::standard(alg.element(["a", "c"]).unwrap()));
}

#[test]
fn representatives_with_exceptions() {
    let alg = AlgebraSpec::letters(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for h in all_values(&alg) {
        let mut ex = BTreeMap::new();
        for _ in 0..rng.gen_range(0..3) {
            ex.insert(alg.element_at(rng.gen_range(0..4)), alg.element_at(rng.gen_range(0..4)));
        }
        let r = Representative::new(h, ex).unwrap();
        let back = through(&HyperJson::from_representative(&alg, &r)).to_representative(&alg).unwrap();
        assert!(back.equivalent(&r).unwrap());
        assert_eq!(back.normalize(), h);
    }
}

#[test]
fn formulas_and_documents() {
    let gen = FormulaGen { atoms: &["p", "q"], forces: &["f", "promise"] };
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..300 {
        let f = gen.formula(&mut rng, 5);
        assert_eq!(Formula::from(&through(&FormulaJson::from(&f))), f);
    }
    let doc = parse("act x = [promise](~y);\nact y = [order](x) & p;\nx | q").unwrap();
    let j = through(&DocumentJson::from(&doc));
    assert_eq!(j.to_document().unwrap(), doc);
    let tagged: FormulaJson =
        serde_json::from_str(r#"{"kind":"force","force":"f","content":{"kind":"atom","name":"p"}}"#).unwrap();
    assert_eq!(Formula::from(&tagged), Formula::force("f", Formula::atom("p")));
}

#[test]
fn valuations() {
    let alg = AlgebraSpec::letters(2).unwrap();
    let ns: Vec<HyperValue> = nonstandard_values(&alg).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for mode in MbMode::ALL {
        for _ in 0..50 {
            let pick = |rng: &mut ChaCha8Rng| ns[rng.gen_range(0..ns.len())];
            let e = |rng: &mut ChaCha8Rng| -> Element { alg.element_at(rng.gen_range(0..4)) };
            let v = MbValuation::new(alg.clone(), mode)
                .atom("p", e(&mut rng))
                .atom("q", e(&mut rng))
                .act("[f](p & q)", pick(&mut rng))
                .generator("f", "p", pick(&mut rng))
                .signature("promise", pick(&mut rng));
            assert_eq!(through(&ValuationJson::from_valuation(&v)).to_valuation().unwrap(), v);
        }
    }
}

#[test]
fn act_keys_are_canonicalized() {
    let j: ValuationJson = serde_json::from_str(
        r#"{"algebra":{"atoms":["a","b"]},"mode":"free","act_values":{"[f]( (p) &q )":{"on_true":["a"],"on_false":[]}}}"#,
    )
    .unwrap();
    let v = j.to_valuation().unwrap();
    assert!(v.act_values.contains_key("[f](p & q)"));
}

#[test]
fn malformed_input_is_rejected() {
    let bad_mode: ValuationJson = serde_json::from_str(r#"{"algebra":{"atoms":["a"]},"mode":"lazy"}"#).unwrap();
    assert!(bad_mode.to_valuation().is_err());
    assert!(serde_json::from_str::<ValuationJson>(r#"{"algebra":{"atoms":["a"]},"mode":"free","extra":1}"#).is_err());
    let alg = AlgebraSpec::letters(1).unwrap();
    let unknown: HyperJson = serde_json::from_str(r#"{"on_true":["z"],"on_false":[]}"#).unwrap();
    assert!(unknown.to_value(&alg).is_err());
}
