use serde::Serialize;

/// Audit stamp attached to every output: the subcommand, the complete flag
/// set after defaulting, and the tool version. Nothing time- or
/// host-dependent is recorded, so reruns with an equal manifest produce
/// byte-identical outputs.
#[derive(Debug, Serialize)]
pub struct RunManifest<'a, C: Serialize> {
    pub command: &'static str,
    pub config_snapshot: &'a C,
    pub version: &'static str,
}

impl<'a, C: Serialize> RunManifest<'a, C> {
    pub fn new(command: &'static str, config_snapshot: &'a C) -> Self {
        RunManifest {
            command,
            config_snapshot,
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}
