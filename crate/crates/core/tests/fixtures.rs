//! The derivation fixtures under `fixtures/derivations/<logic>/`.
//!
//! The finite-union derivation is transcribed by hand with the builder in
//! `support`; the others are prover output frozen to disk. Set
//! `DNC_BLESS=1` to rewrite the files.

mod support;

use std::fs;

use dnc_core::checker::{check_derivation, check_json};
use dnc_core::engine::{prove, Derivation, DerivationJson, Rule, SearchConfig};
use dnc_core::harness::fixtures::{self as fx, formula};
use dnc_core::syntax::{parse_sequent, Formula, Sequent, Term};
use dnc_core::translate::{classicize, expand, translate_dowek};
use dnc_core::Logic;
use support::{fixture_dir, Tac};

fn peel(f: &Formula, n: usize) -> Formula {
    let mut f = f.clone();
    for _ in 0..n {
        f = match f {
            Formula::Not(a) => (*a).clone(),
            other => panic!("`{other}` is not a negation"),
        };
    }
    f
}

fn body(f: &Formula) -> Formula {
    match f {
        Formula::Forall(_, a) => (**a).clone(),
        other => panic!("`{other}` is not universal"),
    }
}

/// `|- H => ||A||` for the finite-union example, rule by rule. Contexts
/// at the axioms are weakened away since the axiom is `A |- A`.
fn finite_union_transcription() -> Derivation {
    let h = formula(fx::FINITE_UNION_AXIOM);
    let goal = expand(&classicize(&formula(fx::FINITE_UNION_GOAL)).unwrap());
    let root = Formula::imp(h.clone(), goal.clone());

    let all_a = peel(&goal, 2);
    let g1 = peel(&body(&all_a), 2);
    let all_b = peel(&g1, 2);
    let g2 = peel(&body(&all_b), 2);
    let imp = peel(&g2, 2);
    let Formula::Imp(x7, nny) = &imp else { panic!("`{imp}` is not an implication") };
    let not_y = peel(nny, 1);
    let y = peel(nny, 2);
    let d = peel(&y, 2);
    let Formula::Or(nnu, nnv) = &d else { panic!("`{d}` is not a disjunction") };

    let inst_a = formula("forall y. (F(a) => F(y) => F(cup(a, y)))");
    let inst_ab = formula("F(a) => F(b) => F(cup(a, b))");
    let inst_b = formula("F(b) => F(cup(a, b))");

    Tac::new(Logic::Constructive, Sequent::goal(root.clone()))
        .step(Rule::ImpR, &root)
        .negations(Rule::NegR, &goal, 2)
        .forall_r(&all_a, "a")
        .negations(Rule::NegR, &body(&all_a), 2)
        .negations(Rule::NegR, &g1, 2)
        .forall_r(&all_b, "b")
        .negations(Rule::NegR, &body(&all_b), 2)
        .negations(Rule::NegR, &g2, 2)
        .step(Rule::ImpR, &imp)
        .step(Rule::NegR, nny)
        .step(Rule::ContrL, &not_y)
        .step(Rule::NegL, &not_y)
        .negations(Rule::NegR, &y, 2)
        .step(Rule::OrR1, &d)
        .negations(Rule::NegR, nnu, 2)
        .negations(Rule::NegR, &peel(nnu, 2), 5)
        .step(Rule::NegL, &not_y)
        .negations(Rule::NegR, &y, 2)
        .step(Rule::OrR2, &d)
        .negations(Rule::NegR, nnv, 2)
        .negations(Rule::NegR, &peel(nnv, 2), 5)
        .negations(Rule::NegL, x7, 7)
        .forall_l(&h, Term::var("a"))
        .forall_l(&inst_a, Term::var("b"))
        .split(Rule::ImpL, &inst_ab, |left, right| {
            (
                left.axiom(&formula("F(a)")),
                right.split(Rule::ImpL, &inst_b, |left, right| {
                    (left.axiom(&formula("F(b)")), right.axiom(&formula("F(cup(a, b))")))
                }),
            )
        })
}

fn proved(logic: Logic, seq: Sequent) -> Derivation {
    let r = prove(&seq, &SearchConfig::new(logic)).unwrap();
    r.derivation().cloned().unwrap_or_else(|| panic!("`{seq}` not proved: {:?}", r.verdict()))
}

fn goal(f: Formula) -> Sequent {
    Sequent::goal(f)
}

/// Name, logic and derivation of every fixture.
fn fixtures() -> Vec<(&'static str, Logic, Derivation)> {
    let h = formula(fx::FINITE_UNION_AXIOM);
    let mixed = Formula::imp(h, expand(&formula(fx::FINITE_UNION_MIXED_GOAL)));
    let and_c = Formula::imp_c(formula(fx::AND_C_HYPOTHESIS), formula(fx::AND_C_GOAL));
    use Logic::{Classical as C, Constructive as K};
    vec![
        ("finite_union_transcribed", K, finite_union_transcription()),
        ("finite_union_mixed", K, proved(K, goal(mixed))),
        ("excluded_middle_translated", K, proved(K, goal(translate_dowek(&formula(fx::EXCLUDED_MIDDLE)).unwrap()))),
        ("and_c_corollary", K, proved(K, goal(expand(&and_c)))),
        ("neg_c_equivalence", K, proved(K, goal(expand(&Formula::iff(formula("~c (P /\\ Q)"), formula("~(P /\\ Q)")))))),
        ("top_c_equivalence", K, proved(K, goal(expand(&Formula::iff(formula("Tc"), formula("T")))))),
        ("forall_exists", K, proved(K, parse_sequent("forall x. P(x) |- exists y. P(y)").unwrap())),
        ("excluded_middle", C, proved(C, goal(formula(fx::EXCLUDED_MIDDLE)))),
        ("peirce", C, proved(C, goal(formula("((P => Q) => P) => P")))),
        ("before_only_counterexample", C, proved(C, goal(formula(fx::BEFORE_ONLY_COUNTEREXAMPLE)))),
    ]
}

fn path(name: &str, logic: Logic) -> std::path::PathBuf {
    fixture_dir().join(logic.name()).join(format!("{name}.json"))
}

#[test]
fn transcription_follows_the_displayed_rules() {
    let d = finite_union_transcription();
    let report = check_derivation(&d, Logic::Constructive);
    assert!(report.valid, "{:#?}", report.violations);
    let mut used = Vec::new();
    d.rules_used(&mut used);
    used.sort();
    let mut expected = vec![
        Rule::Axiom,
        Rule::ContrL,
        Rule::WeakL,
        Rule::NegL,
        Rule::NegR,
        Rule::OrR1,
        Rule::OrR2,
        Rule::ImpL,
        Rule::ImpR,
        Rule::ForallL,
        Rule::ForallR,
    ];
    expected.sort();
    assert_eq!(used, expected);
}

#[test]
fn fixtures_on_disk_are_current_and_valid() {
    let bless = std::env::var_os("DNC_BLESS").is_some();
    for (name, logic, d) in fixtures() {
        let file = path(name, logic);
        let text = serde_json::to_string_pretty(&d.to_json()).unwrap() + "\n";
        if bless || !file.exists() {
            fs::create_dir_all(file.parent().unwrap()).unwrap();
            fs::write(&file, &text).unwrap();
        }
        let on_disk = fs::read_to_string(&file).unwrap();
        let doc: DerivationJson = serde_json::from_str(&on_disk).unwrap();
        let report = check_json(&doc, logic);
        assert!(report.valid, "{name}: {:#?}", report.violations);
        if name == "finite_union_transcribed" {
            assert_eq!(on_disk, text, "transcription changed; rerun with DNC_BLESS=1");
        }
    }
}
