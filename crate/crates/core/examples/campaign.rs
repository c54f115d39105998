//! Run a few verification campaigns with a reduced configuration.

use algshift::campaign::{run_campaign, CampaignConfig};

fn main() -> algshift::Result<()> {
    let cfg = CampaignConfig {
        samples: Some(50),
        max_exhaustive_n: 5,
        ..CampaignConfig::default()
    };
    for name in ["c5-golden", "mantel-shift", "homology-lemma", "tfree-claim"] {
        let r = run_campaign(name, &cfg)?;
        println!("{name:<15} passed={} cases={} time={:.2}s", r.passed, r.cases.len(), r.wall_time_secs);
        for c in &r.cases {
            println!("    {:<32} checked {:>5}", c.id, c.checked);
        }
    }
    Ok(())
}
