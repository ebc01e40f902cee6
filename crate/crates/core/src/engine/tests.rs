use super::*;
use crate::checker::{check_derivation, to_classical};
use crate::semantics::{eval_boolean, find_kripke_countermodel};
use crate::syntax::{enumerate_formulas, parse_formula, parse_sequent, Connective};
use crate::translate::{expand, translate_dowek, translate_variant, Variant};

fn f(s: &str) -> Formula {
    parse_formula(s).unwrap()
}

fn run(logic: Logic, seq: &Sequent) -> SearchResult {
    let r = prove(seq, &SearchConfig::new(logic)).unwrap();
    if let SearchResult::Provable(d) = &r {
        let report = check_derivation(d, logic);
        assert!(report.valid, "{seq}: {:?}\n{}", report.violations, d.render_tree());
        assert_eq!(&d.conclusion, seq);
    }
    r
}

fn verdict(logic: Logic, s: &str) -> Verdict {
    run(logic, &parse_sequent(s).unwrap()).verdict()
}

#[test]
fn excluded_middle() {
    assert_eq!(verdict(Logic::Classical, "|- P \\/ ~P"), Verdict::Provable);
    assert_eq!(verdict(Logic::Constructive, "|- P \\/ ~P"), Verdict::Refuted);
    let t = Sequent::goal(translate_dowek(&f("P \\/ ~P")).unwrap());
    assert_eq!(run(Logic::Constructive, &t).verdict(), Verdict::Provable);
}

#[test]
fn after_only_counterexample_is_refuted_with_a_kripke_model() {
    let r = run(Logic::Constructive, &parse_sequent("|- ~~P \\/ ~~~~~P").unwrap());
    let SearchResult::Refuted(Certificate::Kripke(m)) = r else { panic!("expected a Kripke certificate") };
    assert!(!kripke_forces(&m, 0, &f("~~P \\/ ~~~~~P")).unwrap());
}

#[test]
fn classical_conjunction_does_not_project_constructively() {
    let seq = parse_sequent("~~(~~P /\\ ~~Q) |- P").unwrap();
    assert_eq!(run(Logic::Constructive, &seq).verdict(), Verdict::Refuted);
    assert_eq!(run(Logic::Classical, &seq).verdict(), Verdict::Provable);
}

#[test]
fn classical_refutations_carry_falsifying_valuations() {
    let seq = parse_sequent("P \\/ Q |- P /\\ Q").unwrap();
    let SearchResult::Refuted(Certificate::Valuation(v)) = run(Logic::Classical, &seq) else { panic!() };
    assert!(eval_boolean(&f("P \\/ Q"), &v).unwrap());
    assert!(!eval_boolean(&f("P /\\ Q"), &v).unwrap());
}

#[test]
fn mode_and_input_errors() {
    let two = parse_sequent("|- P, Q").unwrap();
    assert_eq!(prove(&two, &SearchConfig::constructive()), Err(ProveError::Mode(2)));
    assert_eq!(run(Logic::Classical, &parse_sequent("|- P, ~P").unwrap()).verdict(), Verdict::Provable);
    let classical = Sequent::goal(f("P \\/c Q"));
    assert!(matches!(prove(&classical, &SearchConfig::classical()), Err(ProveError::NotCore(_))));
    assert_eq!(prove(&two, &SearchConfig::classical().with_depth(0)), Err(ProveError::Config));
}

#[test]
fn decide_examples() {
    assert!(decide_propositional(Logic::Classical, &f("P \\/ ~P")).unwrap());
    assert!(!decide_propositional(Logic::Constructive, &f("P \\/ ~P")).unwrap());
    assert!(decide_propositional(Logic::Classical, &f("~~(~~P /\\ ~~Q) => P")).unwrap());
    assert!(matches!(decide_propositional(Logic::Classical, &f("forall x. P(x)")), Err(ProveError::Quantifier(_))));
}

#[test]
fn first_order_examples() {
    assert_eq!(verdict(Logic::Constructive, "|- (forall x. P(x)) => P(a())"), Verdict::Provable);
    assert_eq!(verdict(Logic::Constructive, "|- (forall x. P(x)) => exists y. P(y)"), Verdict::Provable);
    assert_eq!(verdict(Logic::Constructive, "|- (exists x. forall y. R(x, y)) => forall y. exists x. R(x, y)"), Verdict::Provable);
    assert_eq!(verdict(Logic::Constructive, "|- (forall y. exists x. R(x, y)) => exists x. forall y. R(x, y)"), Verdict::Exhausted);
    assert_eq!(verdict(Logic::Classical, "|- exists x. (P(x) => forall y. P(y))"), Verdict::Provable);
    assert_eq!(verdict(Logic::Constructive, "|- exists x. (P(x) => forall y. P(y))"), Verdict::Exhausted);
    assert_eq!(verdict(Logic::Classical, "|- forall x. P(x) \\/ ~P(x)"), Verdict::Provable);
}

#[test]
fn eigenvariables_avoid_free_variables() {
    let seq = parse_sequent("P(x) |- forall x. P(x)").unwrap();
    assert_eq!(run(Logic::Classical, &seq).verdict(), Verdict::Exhausted);
    let ok = parse_sequent("forall x. P(x) |- forall y. P(y)").unwrap();
    let SearchResult::Provable(d) = run(Logic::Constructive, &ok) else { panic!() };
    assert_eq!(d.rule, Rule::ForallR);
}

#[test]
fn before_only_first_order_counterexample() {
    let a = f("(forall x. (P(x) /\\ Q)) => forall x. P(x)");
    assert_eq!(run(Logic::Classical, &Sequent::goal(a.clone())).verdict(), Verdict::Provable);
    let t = translate_variant(Variant::BeforeOnly, &a).unwrap();
    assert_eq!(run(Logic::Constructive, &Sequent::goal(t)).verdict(), Verdict::Exhausted);
}

#[test]
fn classical_constants_match_their_core_counterparts() {
    for (c, core) in [("Tc", "T"), ("Fc", "F"), ("~c (P /\\ Q)", "~(P /\\ Q)")] {
        let seq = Sequent::goal(expand(&Formula::iff(f(c), f(core))));
        assert_eq!(run(Logic::Constructive, &seq).verdict(), Verdict::Provable, "{c}");
    }
}

#[test]
fn constructive_derivations_are_classical_after_adaptation() {
    for s in ["|- ((P => Q) => P) => ~~P", "P => Q, ~Q |- ~P", "|- ~~(P \\/ ~P)"] {
        let seq = parse_sequent(s).unwrap();
        let SearchResult::Provable(d) = run(Logic::Constructive, &seq) else { panic!("{s}") };
        let report = check_derivation(&to_classical(&d), Logic::Classical);
        assert!(report.valid, "{s}: {:?}", report.violations);
    }
}

#[test]
fn agrees_with_oracles_on_small_corpus() {
    for a in enumerate_formulas(&["P", "Q"], 5, &Connective::ALL) {
        let seq = Sequent::goal(a.clone());
        for logic in [Logic::Classical, Logic::Constructive] {
            let r = run(logic, &seq);
            assert_eq!(r.is_provable(), decide_propositional(logic, &a).unwrap(), "{logic} {a}");
            match r {
                SearchResult::Refuted(Certificate::Kripke(m)) => assert!(!kripke_forces(&m, 0, &a).unwrap()),
                SearchResult::Refuted(Certificate::Valuation(v)) => assert!(!eval_boolean(&a, &v).unwrap()),
                _ => {}
            }
        }
        let t = Sequent::goal(translate_dowek(&a).unwrap());
        assert_eq!(
            run(Logic::Constructive, &t).is_provable(),
            decide_propositional(Logic::Classical, &a).unwrap(),
            "{a}"
        );
    }
}

#[test]
fn small_kripke_search_agrees_with_g4ip() {
    for a in enumerate_formulas(&["P", "Q"], 5, &Connective::ALL) {
        let refutable = find_kripke_countermodel(&a, 5).unwrap().is_some();
        assert_eq!(refutable, !decide_propositional(Logic::Constructive, &a).unwrap(), "{a}");
    }
}

#[test]
fn deterministic() {
    let seq = Sequent::goal(translate_dowek(&f("(P => Q) \\/ (Q => P)")).unwrap());
    let a = prove(&seq, &SearchConfig::constructive()).unwrap();
    let b = prove(&seq, &SearchConfig::constructive()).unwrap();
    assert_eq!(a, b);
}
