//! Enumeration of artinian monomial ideals, batch tangent statistics,
//! counterexample comparisons and the verification suite.

mod enumerate;
mod record;
mod search;
mod verify;

pub use enumerate::{
    count_strongly_stable, enumerate_all_artinian, enumerate_strongly_stable, random_artinian,
    visit_strongly_stable, StrictPartition, ALL_ARTINIAN_MAX_D,
};
pub use record::{flags_for, special_ideals, write_csv, write_jsonl, CensusRecord, CSV_HEADER};
pub use search::{
    check_budget, counterexample_family_report, counterexample_report, reports_in_order,
    search_extremes, summarize, with_workers, CensusSummary, CounterexampleReport, SearchOptions,
    CENSUS_BUDGET,
};
pub use verify::{
    is_smooth, pairing_holds, parity_holds, plane_identities_hold, ppn_bound_holds,
    slice_duality_holds, smoothness_criterion_holds, socle_count_holds, verify_theorem_suite,
    verify_theorem_suite_with, Status, VerifyReport, VerifyRow, ALL_IDEALS_MAX_D, PLANE_MAX_D,
};
