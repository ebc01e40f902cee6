use serde_json::Value;

use dnc_core::checker::check_json;
use dnc_core::engine::DerivationJson;
use dnc_core::semantics::{kripke_forces, KripkeJson, KripkeModel};
use dnc_core::syntax::parse_formula;
use dnc_core::Logic;
use dnc_wasm::{countermodel, prove, translate};

fn parsed(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn translate_reports_formulas_and_errors() {
    assert_eq!(parsed(translate("dowek", "P \\/ ~P"))["formula"], "~~(~~P \\/ ~~~~~~~P)");
    assert_eq!(parsed(translate("light", "P => Q"))["formula"], "~~P => ~~Q");
    assert!(parsed(translate("goedel", "P"))["error"].is_string());
    assert!(parsed(translate("dowek", "P /\\"))["error"].is_string());
    assert!(parsed(translate("dowek", "P \\/c Q"))["error"].is_string());
}

#[test]
fn prove_returns_checkable_derivations() {
    let out = parsed(prove("constructive", "|- ~~(~~P \\/ ~~~~~~~P)", 0));
    assert_eq!(out["verdict"], "provable");
    let doc: DerivationJson = serde_json::from_value(out["derivation"].clone()).unwrap();
    assert!(check_json(&doc, Logic::Constructive).valid);
    assert!(out["tree"].as_str().unwrap().contains("|-"));

    assert_eq!(parsed(prove("constructive", "|- (P /\\c Q) =>c P", 0))["verdict"], "provable");
}

#[test]
fn prove_returns_certificates() {
    let out = parsed(prove("constructive", "~~P \\/ ~~~~~P", 0));
    assert_eq!(out["verdict"], "refuted");
    let doc: KripkeJson = serde_json::from_value(out["model"].clone()).unwrap();
    let m = KripkeModel::from_json(&doc).unwrap();
    assert!(!kripke_forces(&m, 0, &parse_formula("~~P \\/ ~~~~~P").unwrap()).unwrap());

    let out = parsed(prove("classical", "P |- Q", 0));
    assert_eq!(out["verdict"], "refuted");
    assert_eq!(out["valuation"]["Q"], false);

    assert!(parsed(prove("modal", "P", 0))["error"].is_string());
}

#[test]
fn countermodel_search() {
    let out = parsed(countermodel("P \\/ ~P", 4));
    let doc: KripkeJson = serde_json::from_value(out["model"].clone()).unwrap();
    assert_eq!(KripkeModel::from_json(&doc).unwrap().world_count(), 2);
    assert!(parsed(countermodel("P => P", 3))["model"].is_null());
    assert!(parsed(countermodel("P", 0))["error"].is_string());
    assert!(parsed(countermodel("forall x. P(x)", 2))["error"].is_string());
}
