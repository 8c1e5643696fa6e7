use pyo3::prelude::*;
use pyo3::types::PyModule;

fn with_module<F: FnOnce(&Bound<'_, PyModule>)>(f: F) {
    Python::initialize();
    Python::attach(|py| {
        let m = PyModule::new(py, "admissible_py").unwrap();
        admissible_py::register(&m).unwrap();
        f(&m);
    });
}

#[test]
fn classify_and_decide_through_python() {
    with_module(|m| {
        let arr = m
            .getattr("Arrangement")
            .unwrap()
            .call_method1("corpus", ("c3_partial",))
            .unwrap();
        let (k, _covers, concurrent): (usize, Vec<Vec<usize>>, bool) =
            arr.call_method0("classify").unwrap().extract().unwrap();
        assert_eq!((k, concurrent), (3, true));
        let ls = m
            .getattr("LocalSystem")
            .unwrap()
            .call_method1("corpus", ("c3_partial", "both_extremal"))
            .unwrap();
        let verdict: String = arr.call_method1("decide", (ls,)).unwrap().extract().unwrap();
        assert!(verdict.contains(r#""verdict":"ADMISSIBLE""#), "{verdict}");
    });
}

#[test]
fn errors_become_value_errors() {
    with_module(|m| {
        let err = m
            .getattr("Arrangement")
            .unwrap()
            .call_method1("from_json", (r#"{"lines": [{"vertical": "1"}, {"vertical": "1"}]}"#,))
            .unwrap_err();
        Python::attach(|py| {
            assert!(err.is_instance_of::<pyo3::exceptions::PyValueError>(py));
            assert!(err.to_string().contains("L0 and L1"));
        });
    });
}
