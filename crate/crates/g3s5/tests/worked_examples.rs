//! The worked derivations, hand-encoded node by node and pushed through
//! the checker, plus search round-trips on the same goals.

use g3s5::formula::parse;
use g3s5::kernel::{check, check_derivation, Derivation, Mode, Principal, RuleId, Variant};
use g3s5::search::{expansion_valid, prove, SearchConfig};
use g3s5::sequent::{text, PlainSequent, ZonedSequent};

fn seq(s: &str) -> ZonedSequent {
    text::parse_zoned(s).unwrap_or_else(|e| panic!("bad sequent {:?}: {}", s, e))
}

fn left(s: &str) -> Principal {
    Principal::Left(parse(s).unwrap())
}

fn right(s: &str) -> Principal {
    Principal::Right(parse(s).unwrap())
}

fn ax(conclusion: &str, atom: &str) -> Derivation {
    Derivation::infer(seq(conclusion), RuleId::Ax, left(atom), vec![])
}

fn infer(conclusion: &str, rule: RuleId, principal: Principal, premises: Vec<Derivation>) -> Derivation {
    Derivation::infer(seq(conclusion), rule, principal, premises)
}

/// ⊢ p, □¬□p: the introduction's derivation in zoned form. Going upward
/// R□ stores p in a diamond block, whose later opening by L◇; puts p on
/// the right where the axiom needs it.
fn intro_derivation() -> Derivation {
    let n4 = ax("p, []p ; |- ; p", "p");
    let n3 = infer("[]p ; |- ; p", RuleId::LBox, left("[]p"), vec![n4]);
    let n2 = infer(
        "[]p ; |- p ;  [blocks: <X:{|p}>]",
        RuleId::LDiaSemi,
        Principal::Block(0),
        vec![n3],
    );
    let n1 = infer(
        "; |- p ; ~[]p  [blocks: <X:{|p}>]",
        RuleId::RNeg,
        right("~[]p"),
        vec![n2],
    );
    infer("; |- ; p, []~[]p", RuleId::RBox, right("[]~[]p"), vec![n1])
}

#[test]
fn introduction_derivation_checks() {
    let d = intro_derivation();
    assert_eq!(check(&d), Ok(()));
    assert_eq!(d.height(), 5);
    assert!(expansion_valid(&d.conclusion));
}

/// The first derivation of the semicolon section:
/// ⊢ (r∧p)→(q→□(◇(p∧q)∧◇r)).
fn semicolon_derivation_one() -> Derivation {
    // Left branch: ;r,p,q ⊢ ◇(p∧q)
    let a1 = ax("p, q, r ; |- ; <>(p & q), p", "p");
    let a2 = ax("p, q, r ; |- ; <>(p & q), q", "q");
    let b1 = infer(
        "p, q, r ; |- ; <>(p & q), p & q",
        RuleId::RAnd,
        right("p & q"),
        vec![a1, a2],
    );
    let b2 = infer("p, q, r ; |- ; <>(p & q)", RuleId::RDia, right("<>(p & q)"), vec![b1]);
    let b3 = infer(
        "; r, p, q |- ; <>(p & q)  [blocks: <X:{r,p,q|}>]",
        RuleId::LDiaSemi,
        Principal::Block(0),
        vec![b2],
    );
    // Right branch: ;r,p,q ⊢ ◇r
    let c1 = ax("p, q, r ; |- ; <>r, r", "r");
    let c2 = infer("p, q, r ; |- ; <>r", RuleId::RDia, right("<>r"), vec![c1]);
    let c3 = infer(
        "; r, p, q |- ; <>r  [blocks: <X:{r,p,q|}>]",
        RuleId::LDiaSemi,
        Principal::Block(0),
        vec![c2],
    );
    let d1 = infer(
        "; r, p, q |- ; <>(p & q) & <>r  [blocks: <X:{r,p,q|}>]",
        RuleId::RAnd,
        right("<>(p & q) & <>r"),
        vec![b3, c3],
    );
    let d2 = infer(
        "r, p, q ; |- ; [](<>(p & q) & <>r)",
        RuleId::RBox,
        right("[](<>(p & q) & <>r)"),
        vec![d1],
    );
    let d3 = infer(
        "r & p, q ; |- ; [](<>(p & q) & <>r)",
        RuleId::LAnd,
        left("r & p"),
        vec![d2],
    );
    let d4 = infer(
        "r & p ; |- ; q -> [](<>(p & q) & <>r)",
        RuleId::RImp,
        right("q -> [](<>(p & q) & <>r)"),
        vec![d3],
    );
    infer(
        "; |- ; (r & p) -> (q -> [](<>(p & q) & <>r))",
        RuleId::RImp,
        right("(r & p) -> (q -> [](<>(p & q) & <>r))"),
        vec![d4],
    )
}

#[test]
fn semicolon_derivation_one_checks() {
    let d = semicolon_derivation_one();
    assert_eq!(check(&d), Ok(()));
    assert!(expansion_valid(&d.conclusion));
}

/// The semicolon derivation of □(□¬p∨p)→□(¬p∨□p) (example item 4).
fn semicolon_derivation_two() -> Derivation {
    // Left L∨ branch, through the box block <Y:{|p}> stored by L◇;.
    let a1 = ax("[]~p, []([]~p | p), p ; |- p ; p  [blocks: <Y:{|p}>]", "p");
    let a2 = infer(
        "~p, []~p, []([]~p | p), p ; |- p ;  [blocks: <Y:{|p}>]",
        RuleId::LNeg,
        left("~p"),
        vec![a1],
    );
    let a3 = infer(
        "[]~p, []([]~p | p), p ; |- p ;  [blocks: <Y:{|p}>]",
        RuleId::LBox,
        left("[]~p"),
        vec![a2],
    );
    let a4 = infer(
        "[]~p, []([]~p | p) ; p |- ; p  [blocks: <X:{p|}>]",
        RuleId::LDiaSemi,
        Principal::Block(0),
        vec![a3],
    );
    // Right L∨ branch closes immediately.
    let b1 = ax("p, []([]~p | p) ; p |- ; p  [blocks: <X:{p|}>]", "p");
    let c1 = infer(
        "[]~p | p, []([]~p | p) ; p |- ; p  [blocks: <X:{p|}>]",
        RuleId::LOr,
        left("[]~p | p"),
        vec![a4, b1],
    );
    let c2 = infer(
        "[]([]~p | p) ; p |- ; p  [blocks: <X:{p|}>]",
        RuleId::LBox,
        left("[]([]~p | p)"),
        vec![c1],
    );
    let c3 = infer(
        "[]([]~p | p), p ; |- ; []p",
        RuleId::RBox,
        right("[]p"),
        vec![c2],
    );
    let c4 = infer(
        "[]([]~p | p) ; |- ; ~p, []p",
        RuleId::RNeg,
        right("~p"),
        vec![c3],
    );
    let c5 = infer(
        "[]([]~p | p) ; |- ; ~p | []p",
        RuleId::ROr,
        right("~p | []p"),
        vec![c4],
    );
    infer(
        "[]([]~p | p) ; |- ; [](~p | []p)",
        RuleId::RBox,
        right("[](~p | []p)"),
        vec![c5],
    )
}

#[test]
fn semicolon_derivation_two_checks() {
    let d = semicolon_derivation_two();
    assert_eq!(check(&d), Ok(()));
    assert!(expansion_valid(&d.conclusion));
}

#[test]
fn dangling_premise_is_located() {
    // R∧ with one premise missing.
    let lone = ax("; |- ; p & q, p", "p");
    let broken = infer("; |- ; p & q", RuleId::RAnd, right("p & q"), vec![lone]);
    let err = check(&broken).unwrap_err();
    assert!(err.path.is_empty());

    // A deeper violation is located by its path.
    let bad_leaf = Derivation::infer(seq("q ; |- ; p"), RuleId::Ax, left("q"), vec![]);
    let wrapped = infer("~p, q ; |- ;", RuleId::LNeg, left("~p"), vec![bad_leaf]);
    let err = check(&wrapped).unwrap_err();
    assert_eq!(err.path, vec![0]);
}

#[test]
fn moving_non_atoms_is_a_strict_violation() {
    // R□ that claims to move p∧q into the stored block.
    let premise = seq("; p & q |- ; r  [blocks: <X:{p & q|}>]");
    let conclusion = seq("p & q ; |- ; []r");
    let step = Derivation::infer(
        conclusion,
        RuleId::RBox,
        right("[]r"),
        vec![Derivation::infer(premise, RuleId::Ax, left("p"), vec![])],
    );
    let err = check_derivation(&step, Variant::Full, Mode::Strict).unwrap_err();
    assert_eq!(err.path, Vec::<usize>::new());
}

fn proves(goal: &str) -> Derivation {
    let g = text::parse_plain(goal).unwrap();
    match prove(&g, &SearchConfig::default()) {
        g3s5::search::SearchResult::Proved(d) => *d,
        g3s5::search::SearchResult::NoProofWithinBound(b) => {
            panic!("no proof of {:?} within depth {}", goal, b)
        }
    }
}

#[test]
fn search_reproves_the_worked_examples() {
    for goal in [
        "|- p, []~[]p",
        "|- (<>[](~p | q) & p) -> q",
        "|- p -> (q | []<>(p & ~q))",
        "|- <>(p -> []p)",
        "|- []([]~p | p) -> [](~p | []p)",
        "|- (r & p) -> (q -> [](<>(p & q) & <>r))",
    ] {
        let d = proves(goal);
        assert_eq!(check(&d), Ok(()), "checker rejects proof of {}", goal);
        let plain = d.conclusion.expand().unwrap();
        assert_eq!(plain, text::parse_plain(goal).unwrap());
        assert!(expansion_valid(&d.conclusion));
    }
}

#[test]
fn search_gives_up_on_invalid_goals() {
    let g = text::parse_plain("p |- q").unwrap();
    let res = prove(&g, &SearchConfig::default());
    assert!(!res.is_proved());
    assert!(!g3s5::kripke::sequent_valid(g.antecedent.iter(), g.succedent.iter())
        .unwrap()
        .is_valid());
}
