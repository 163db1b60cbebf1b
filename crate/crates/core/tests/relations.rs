use cauchy_semiaxis::relations::{check_relation, list_relations, RelationId, RelationParams};
use cauchy_semiaxis::Error;

fn expansion(id: RelationId) -> bool {
    matches!(id, RelationId::R5_8_0a | RelationId::R5_8_0b)
}

#[test]
fn closed_form_catalog_holds_on_default_grids() {
    for id in RelationId::ALL.into_iter().filter(|&id| !expansion(id)) {
        for params in id.default_param_sets() {
            let grid = id.default_grid(&params);
            let report = check_relation(id, &params, &grid, 1e-5, 1e-5).unwrap();
            assert!(report.pass, "{id} {params:?}: abs {} rel {}", report.max_abs_dev, report.max_rel_dev);
            assert_eq!(report.points.len(), grid.len());
        }
    }
}

#[test]
fn kernel_expansions_report_their_deviation() {
    for id in [RelationId::R5_8_0a, RelationId::R5_8_0b] {
        let params = RelationParams { truncation: 12, ..RelationParams::default() };
        let report = check_relation(id, &params, &id.default_grid(&params), 1e-5, 1e-5).unwrap();
        assert!(report.max_abs_dev.is_finite());
        assert!(report.points.iter().all(|p| p.x > 0.0 && (p.x - params.t).abs() >= 0.5));
    }
}

#[test]
fn reports_serialize_with_stable_keys() {
    let params = RelationParams { n: 2, ..RelationParams::default() };
    let report = check_relation(RelationId::R2_22a, &params, &[0.5, 2.0], 1e-8, 1e-8).unwrap();
    let a = report.to_json().unwrap();
    let b = check_relation(RelationId::R2_22a, &params, &[0.5, 2.0], 1e-8, 1e-8).unwrap().to_json().unwrap();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    for k in ["id", "params", "tol", "points", "max_abs_dev", "max_rel_dev", "pass"] {
        assert!(keys.contains(&k), "{k}");
    }
}

#[test]
fn catalog_entries_parse_back() {
    let entries = list_relations();
    assert_eq!(entries.len(), RelationId::ALL.len());
    for e in entries {
        assert_eq!(e.id.to_string().parse::<RelationId>().unwrap(), e.id);
        assert!(!e.default_grid.is_empty());
    }
    assert!(matches!("R7_1".parse::<RelationId>(), Err(Error::UnknownRelation(_))));
}

#[test]
fn wrong_axis_is_a_schema_error() {
    let p = RelationParams::default();
    assert!(matches!(check_relation(RelationId::R4_15, &p, &[1.0], 1e-6, 1e-6), Err(Error::ParamSchema(_))));
    assert!(matches!(check_relation(RelationId::R2_13a, &p, &[-1.0], 1e-6, 1e-6), Err(Error::ParamSchema(_))));
}
