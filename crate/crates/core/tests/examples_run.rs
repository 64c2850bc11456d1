// Every offline example, run as a test so they cannot rot.

#[allow(dead_code)]
#[path = "../examples/affiliation_scores.rs"]
mod affiliation_scores;

#[allow(dead_code)]
#[path = "../examples/irregular_sampling.rs"]
mod irregular_sampling;

#[allow(dead_code)]
#[path = "../examples/mock_pipeline.rs"]
mod mock_pipeline;

#[allow(dead_code)]
#[path = "../examples/multivariate_inject.rs"]
mod multivariate_inject;

#[allow(dead_code)]
#[path = "../examples/parse_replies.rs"]
mod parse_replies;

#[allow(dead_code)]
#[path = "../examples/plan_census.rs"]
mod plan_census;

#[allow(dead_code)]
#[path = "../examples/render_grid.rs"]
mod render_grid;

#[allow(dead_code)]
#[path = "../examples/synth_inject.rs"]
mod synth_inject;

#[test]
fn affiliation_scores_runs() {
    affiliation_scores::run().unwrap();
}

#[test]
fn irregular_sampling_runs() {
    irregular_sampling::run().unwrap();
}

#[test]
fn multivariate_inject_runs() {
    multivariate_inject::run().unwrap();
}

#[test]
fn parse_replies_runs() {
    parse_replies::run().unwrap();
}

#[test]
fn plan_census_runs() {
    plan_census::run().unwrap();
}

#[test]
fn synth_inject_runs() {
    synth_inject::run().unwrap();
}

#[test]
fn render_grid_writes_pngs() {
    let tmp = tempfile::TempDir::new().unwrap();
    render_grid::run(Some(tmp.path().to_path_buf())).unwrap();
    let pngs = std::fs::read_dir(tmp.path()).unwrap().count();
    assert!(pngs >= 2);
}

#[test]
fn mock_pipeline_writes_a_report() {
    let tmp = tempfile::TempDir::new().unwrap();
    mock_pipeline::run(tmp.path()).unwrap();
    assert!(tmp.path().join("report/report.md").exists());
}
