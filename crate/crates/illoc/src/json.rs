//! JSON forms of algebras, values, formulas, valuations and reports.

use std::collections::BTreeMap;

use illoc_core::matrix_m::{AtomValuation2, TruthValue4};
use illoc_core::opposition::{Counterexample, LawStatus, OppositionReport, RelationCheck, Valuation, Value};
use illoc_core::syntax::{print, ActDefinitions, Document, Formula};
use illoc_core::{AlgebraSpec, Element, Error, HyperValue, MbMode, MbValuation, Representative};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value as Json};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub atoms: Vec<String>,
}

impl AlgebraJson {
    pub fn from_spec(alg: &AlgebraSpec) -> Self {
        AlgebraJson { atoms: alg.atoms().to_vec() }
    }

    pub fn to_spec(&self) -> Result<AlgebraSpec, Error> {
        AlgebraSpec::new(&self.atoms)
    }
}

pub fn element_to_json(alg: &AlgebraSpec, e: Element) -> Vec<String> {
    alg.names(e).into_iter().map(String::from).collect()
}

pub fn element_from_json(alg: &AlgebraSpec, names: &[String]) -> Result<Element, Error> {
    alg.element(names)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionJson {
    pub at: Vec<String>,
    pub value: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HyperJson {
    Full {
        on_true: Vec<String>,
        on_false: Vec<String>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        exceptions: Vec<ExceptionJson>,
    },
    Standard {
        standard: Vec<String>,
    },
}

impl HyperJson {
    pub fn from_value(alg: &AlgebraSpec, h: HyperValue) -> Self {
        Self::from_representative(alg, &h.into())
    }

    pub fn from_representative(alg: &AlgebraSpec, r: &Representative) -> Self {
        HyperJson::Full {
            on_true: element_to_json(alg, r.value.on_true()),
            on_false: element_to_json(alg, r.value.on_false()),
            exceptions: r
                .exceptions
                .iter()
                .map(|(at, v)| ExceptionJson { at: element_to_json(alg, *at), value: element_to_json(alg, *v) })
                .collect(),
        }
    }

    pub fn to_representative(&self, alg: &AlgebraSpec) -> Result<Representative, Error> {
        match self {
            HyperJson::Standard { standard } => Ok(HyperValue::standard(alg.element(standard)?).into()),
            HyperJson::Full { on_true, on_false, exceptions } => {
                let value = HyperValue::new(alg.element(on_true)?, alg.element(on_false)?)?;
                let mut map = BTreeMap::new();
                for e in exceptions {
                    map.insert(alg.element(&e.at)?, alg.element(&e.value)?);
                }
                Representative::new(value, map)
            }
        }
    }

    /// The normalized value.
    pub fn to_value(&self, alg: &AlgebraSpec) -> Result<HyperValue, Error> {
        Ok(self.to_representative(alg)?.normalize())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FormulaJson {
    Atom { name: String },
    Not { operand: Box<FormulaJson> },
    And { left: Box<FormulaJson>, right: Box<FormulaJson> },
    Or { left: Box<FormulaJson>, right: Box<FormulaJson> },
    Implies { left: Box<FormulaJson>, right: Box<FormulaJson> },
    Force { force: String, content: Box<FormulaJson> },
    ActRef { name: String },
}

impl From<&Formula> for FormulaJson {
    fn from(f: &Formula) -> Self {
        let b = |x: &Formula| Box::new(FormulaJson::from(x));
        match f {
            Formula::Atom(n) => FormulaJson::Atom { name: n.clone() },
            Formula::ActRef(n) => FormulaJson::ActRef { name: n.clone() },
            Formula::Not(x) => FormulaJson::Not { operand: b(x) },
            Formula::And(l, r) => FormulaJson::And { left: b(l), right: b(r) },
            Formula::Or(l, r) => FormulaJson::Or { left: b(l), right: b(r) },
            Formula::Implies(l, r) => FormulaJson::Implies { left: b(l), right: b(r) },
            Formula::Force(n, x) => FormulaJson::Force { force: n.clone(), content: b(x) },
        }
    }
}

impl From<&FormulaJson> for Formula {
    fn from(j: &FormulaJson) -> Self {
        let f = |x: &FormulaJson| Formula::from(x);
        match j {
            FormulaJson::Atom { name } => Formula::atom(name.clone()),
            FormulaJson::ActRef { name } => Formula::act_ref(name.clone()),
            FormulaJson::Not { operand } => Formula::not(f(operand)),
            FormulaJson::And { left, right } => Formula::and(f(left), f(right)),
            FormulaJson::Or { left, right } => Formula::or(f(left), f(right)),
            FormulaJson::Implies { left, right } => Formula::implies(f(left), f(right)),
            FormulaJson::Force { force, content } => Formula::force(force.clone(), f(content)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefinitionJson {
    pub name: String,
    pub body: FormulaJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocumentJson {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub definitions: Vec<DefinitionJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula: Option<FormulaJson>,
}

impl From<&Document> for DocumentJson {
    fn from(d: &Document) -> Self {
        DocumentJson {
            definitions: d.definitions.iter().map(|(n, b)| DefinitionJson { name: n.into(), body: b.into() }).collect(),
            formula: d.formula.as_ref().map(FormulaJson::from),
        }
    }
}

impl DocumentJson {
    pub fn to_document(&self) -> Result<Document, Error> {
        let mut definitions = ActDefinitions::new();
        for d in &self.definitions {
            definitions.insert(d.name.clone(), (&d.body).into())?;
        }
        Ok(Document { definitions, formula: self.formula.as_ref().map(Formula::from) })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValuationJson {
    pub algebra: AlgebraJson,
    pub mode: String,
    #[serde(default)]
    pub atom_values: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub act_values: BTreeMap<String, HyperJson>,
    #[serde(default)]
    pub generators: BTreeMap<String, BTreeMap<String, HyperJson>>,
    #[serde(default)]
    pub signatures: BTreeMap<String, HyperJson>,
}

impl ValuationJson {
    pub fn from_valuation(v: &MbValuation) -> Self {
        let alg = &v.algebra;
        let h = |x: &HyperValue| HyperJson::from_value(alg, *x);
        ValuationJson {
            algebra: AlgebraJson::from_spec(alg),
            mode: v.mode.to_string(),
            atom_values: v.atom_values.iter().map(|(k, e)| (k.clone(), element_to_json(alg, *e))).collect(),
            act_values: v.act_values.iter().map(|(k, x)| (k.clone(), h(x))).collect(),
            generators: v
                .generators
                .iter()
                .map(|(f, m)| (f.clone(), m.iter().map(|(a, x)| (a.clone(), h(x))).collect()))
                .collect(),
            signatures: v.signatures.iter().map(|(k, x)| (k.clone(), h(x))).collect(),
        }
    }

    pub fn to_valuation(&self) -> Result<MbValuation, Error> {
        let alg = self.algebra.to_spec()?;
        let mode: MbMode = self.mode.parse().map_err(Error::UnsupportedSpace)?;
        let mut v = MbValuation::new(alg.clone(), mode);
        for (a, names) in &self.atom_values {
            v = v.atom(a, alg.element(names)?);
        }
        for (k, x) in &self.act_values {
            let key = k.parse::<Formula>().map(|f| print(&f)).map_err(|e| Error::InvalidName(format!("{k} ({e})")))?;
            v = v.act(&key, x.to_value(&alg)?);
        }
        for (f, m) in &self.generators {
            for (a, x) in m {
                v = v.generator(f, a, x.to_value(&alg)?);
            }
        }
        for (f, x) in &self.signatures {
            v = v.signature(f, x.to_value(&alg)?);
        }
        Ok(v)
    }
}

pub fn assignment_to_json(e: &AtomValuation2) -> Json {
    Json::Object(e.0.iter().map(|(k, b)| (k.clone(), json!(u8::from(*b)))).collect())
}

pub fn valuation_to_json(v: &Valuation) -> Json {
    match v {
        Valuation::M(e) => assignment_to_json(e),
        Valuation::Mb(v) => serde_json::to_value(ValuationJson::from_valuation(v)).expect("plain data"),
    }
}

pub fn truth_to_json(v: TruthValue4) -> Json {
    json!(v.to_string())
}

pub fn value_to_json(alg: Option<&AlgebraSpec>, v: Value) -> Json {
    match v {
        Value::M(t) => truth_to_json(t),
        Value::Mb(h) => {
            let alg = alg.expect("*B values need their algebra");
            serde_json::to_value(HyperJson::from_value(alg, h)).expect("plain data")
        }
    }
}

pub fn counterexample_to_json(alg: Option<&AlgebraSpec>, c: &Counterexample) -> Json {
    json!({
        "valuation": valuation_to_json(&c.valuation),
        "left": value_to_json(alg, c.left),
        "right": value_to_json(alg, c.right),
    })
}

fn relation_to_json(r: &RelationCheck) -> Json {
    json!({ "holds": r.holds, "witness": r.witness.as_ref().map(valuation_to_json) })
}

fn law_to_json(alg: Option<&AlgebraSpec>, formula: &str, l: &LawStatus) -> Json {
    json!({
        "formula": formula,
        "values": l.values.iter().map(|v| value_to_json(alg, *v)).collect::<Vec<_>>(),
        "designated": l.designated_everywhere,
        "witness": l.witness.as_ref().map(valuation_to_json),
    })
}

pub fn report_to_json(alg: Option<&AlgebraSpec>, force: &str, atom: &str, r: &OppositionReport) -> Json {
    let tertium = format!("~[{force}](~{atom}) | ~[{force}]({atom})");
    let contrary = format!("~([{force}](~{atom}) & [{force}]({atom}))");
    let mut out = json!({
        "square_holds": r.square_holds,
        "relations": {
            "contrary": relation_to_json(&r.contrary),
            "contradictory": relation_to_json(&r.contradictory),
            "subcontrary": relation_to_json(&r.subcontrary),
            "subaltern_left": relation_to_json(&r.subaltern_left),
            "subaltern_right": relation_to_json(&r.subaltern_right),
        },
        "laws": {
            "tertium_non_datur": law_to_json(alg, &tertium, &r.laws.tertium_non_datur),
            "law_of_contrary": law_to_json(alg, &contrary, &r.laws.law_of_contrary),
            "coincide": r.laws.coincide,
        },
    });
    if let (Some(sq), Some(alg)) = (&r.generator_square, alg) {
        let h = |x: HyperValue| serde_json::to_value(HyperJson::from_value(alg, x)).expect("plain data");
        let rel = |x: &illoc_core::hyper::Relation| json!({ "holds": x.holds, "inf": h(x.inf), "sup": h(x.sup) });
        out["generator_square"] = json!({
            "holds": sq.holds,
            "contrary": rel(&sq.contrary),
            "contradictory": rel(&sq.contradictory),
            "contradictory_neg": rel(&sq.contradictory_neg),
            "subcontrary": rel(&sq.subcontrary),
            "subaltern_left": rel(&sq.subaltern_left),
            "subaltern_right": rel(&sq.subaltern_right),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyper_json_forms() {
        let alg = AlgebraSpec::new(["a", "b"]).unwrap();
        let std: HyperJson = serde_json::from_str(r#"{"standard": ["a"]}"#).unwrap();
        assert_eq!(std.to_value(&alg).unwrap(), HyperValue::standard(alg.element(["a"]).unwrap()));
        let full: HyperJson = serde_json::from_str(
            r#"{"on_true": ["a"], "on_false": [], "exceptions": [{"at": ["b"], "value": ["a", "b"]}]}"#,
        )
        .unwrap();
        let r = full.to_representative(&alg).unwrap();
        assert_eq!(r.exceptions.len(), 1);
        assert_eq!(HyperJson::from_representative(&alg, &r), full);
    }

    #[test]
    fn formula_json_round_trip() {
        let f: Formula = "[promise](p & ~q) -> x".parse().unwrap();
        let j = serde_json::to_value(FormulaJson::from(&f)).unwrap();
        assert_eq!(j["kind"], "implies");
        assert_eq!(j["left"]["kind"], "force");
        assert_eq!(j["left"]["force"], "promise");
        let back: FormulaJson = serde_json::from_value(j).unwrap();
        assert_eq!(Formula::from(&back), f);
    }
}
