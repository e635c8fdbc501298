use neatalg::field::FieldSpec;
use neatalg_harness::{Budgets, HarnessError, SuiteConfig, SuiteName, TypeName};

#[test]
fn parses_a_full_config() {
    let text = "
        # comment line
        fields = GF(2), GF(4), Q
        types = orthogonal, symplectic   # trailing comment
        degrees = 2, 4
        seed = 17
        suites = cap2-form, lem-PC, springer
        budget.pc = 7
        budget.springer = 3
    ";
    let cfg = SuiteConfig::parse(text).unwrap();
    assert_eq!(
        cfg.fields,
        vec![
            FieldSpec::parse("GF(2)").unwrap(),
            FieldSpec::parse("GF(4)").unwrap(),
            FieldSpec::parse("Q").unwrap()
        ]
    );
    assert_eq!(cfg.types, vec![TypeName::Orthogonal, TypeName::Symplectic]);
    assert_eq!(cfg.degrees, vec![2, 4]);
    assert_eq!(cfg.seed, 17);
    assert_eq!(cfg.suites, vec![SuiteName::Cap2Form, SuiteName::LemPc, SuiteName::Springer]);
    assert_eq!(
        cfg.budgets,
        Budgets {
            pc: 7,
            springer: 3,
            ..Budgets::default()
        }
    );
}

#[test]
fn grid_is_field_major() {
    let cfg = SuiteConfig::parse("fields = GF(2), GF(3)\ntypes = orthogonal, unitary\ndegrees = 1, 2").unwrap();
    let labels: Vec<String> = cfg.grid().iter().map(ToString::to_string).collect();
    assert_eq!(
        labels,
        [
            "GF(2) orthogonal 1",
            "GF(2) orthogonal 2",
            "GF(2) unitary 1",
            "GF(2) unitary 2",
            "GF(3) orthogonal 1",
            "GF(3) orthogonal 2",
            "GF(3) unitary 1",
            "GF(3) unitary 2",
        ]
    );
}

#[test]
fn empty_config_is_valid() {
    let cfg = SuiteConfig::parse("").unwrap();
    assert!(cfg.grid().is_empty());
    assert!(cfg.suites.is_empty());
}

#[test]
fn every_suite_name_round_trips() {
    for s in SuiteName::ALL {
        assert_eq!(s.as_str().parse::<SuiteName>().unwrap(), s);
        assert_eq!(serde_json::to_value(s).unwrap(), s.as_str());
    }
    for t in TypeName::ALL {
        assert_eq!(t.as_str().parse::<TypeName>().unwrap(), t);
    }
}

#[test]
fn rejects_bad_configs() {
    let bad = [
        ("types = symplectic\ndegrees = 2, 3", "not realizable"),
        ("suites = prop-neat, nonsense", "nonsense"),
        ("types = hermitian", "hermitian"),
        ("fields = GF(6)", "6"),
        ("seed = 1\nseed = 2", "duplicate"),
        ("colour = blue", "unknown key"),
        ("budget.time = 3", "unknown budget"),
        ("degrees = two", "cannot parse"),
        ("fields GF(2)", "key = value"),
    ];
    for (text, needle) in bad {
        match SuiteConfig::parse(text) {
            Err(HarnessError::Config(msg)) => assert!(msg.contains(needle), "{text:?}: {msg}"),
            other => panic!("{text:?}: expected a config error, got {other:?}"),
        }
    }
}

#[test]
fn symplectic_odd_degree_is_unrealizable() {
    assert!(TypeName::Symplectic.realizable(4));
    assert!(!TypeName::Symplectic.realizable(3));
    assert!(TypeName::Orthogonal.realizable(3));
    assert!(!TypeName::Unitary.realizable(0));
}
