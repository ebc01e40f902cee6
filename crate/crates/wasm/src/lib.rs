//! Browser entry points. Each takes strings and returns a JSON string,
//! either the result or `{"error": "..."}`, so the page never has to
//! catch exceptions. The functions are ordinary Rust and are tested
//! natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use dnc_core::engine::{prove as search, Certificate, SearchConfig, SearchResult};
use dnc_core::semantics::find_kripke_countermodel;
use dnc_core::syntax::{parse_formula_checked, parse_sequent, Sequent};
use dnc_core::translate::{expand, TranslationMethod};
use dnc_core::Logic;

/// Larger searches would freeze the tab.
pub const MAX_WORLDS: usize = 8;

fn reply(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

/// `method` is one of dowek, kgg, before, after, light.
#[wasm_bindgen]
pub fn translate(method: &str, formula: &str) -> String {
    reply((|| {
        let method: TranslationMethod = method.parse()?;
        let f = parse_formula_checked(formula).map_err(|e| e.to_string())?;
        let t = method.apply(&f).map_err(|e| e.to_string())?;
        Ok(json!({ "formula": t.to_string() }))
    })())
}

/// Searches for a derivation of `sequent` after expanding classical
/// constructors. A depth of 0 selects the default.
#[wasm_bindgen]
pub fn prove(logic: &str, sequent: &str, depth: usize) -> String {
    reply((|| {
        let logic = match logic {
            "classical" => Logic::Classical,
            "constructive" => Logic::Constructive,
            other => return Err(format!("unknown logic `{other}`")),
        };
        let s = parse_sequent(sequent).map_err(|e| e.to_string())?;
        let s = Sequent::new(s.antecedent.iter().map(expand).collect(), s.succedent.iter().map(expand).collect());
        let mut config = SearchConfig::new(logic);
        if depth > 0 {
            config = config.with_depth(depth);
        }
        let result = search(&s, &config).map_err(|e| e.to_string())?;
        let mut out = json!({ "verdict": result.verdict(), "sequent": s.to_string() });
        match result {
            SearchResult::Provable(d) => {
                out["tree"] = json!(d.render_tree());
                out["derivation"] = json!(d.to_json());
            }
            SearchResult::Refuted(Certificate::Valuation(v)) => out["valuation"] = json!(v),
            SearchResult::Refuted(Certificate::Kripke(m)) => out["model"] = json!(m.to_json()),
            SearchResult::Exhausted(_) => {}
        }
        Ok(out)
    })())
}

/// A Kripke model with at most `max_worlds` worlds whose root does not
/// force the propositional `formula`; `model` is null if there is none.
#[wasm_bindgen]
pub fn countermodel(formula: &str, max_worlds: usize) -> String {
    reply((|| {
        if !(1..=MAX_WORLDS).contains(&max_worlds) {
            return Err(format!("max_worlds must be between 1 and {MAX_WORLDS}"));
        }
        let f = expand(&parse_formula_checked(formula).map_err(|e| e.to_string())?);
        let model = find_kripke_countermodel(&f, max_worlds).map_err(|e| e.to_string())?;
        Ok(json!({ "model": model.map(|m| m.to_json()) }))
    })())
}
