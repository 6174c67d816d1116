mod scans;
mod structure;

use crate::config::{CliError, RunArgs};

pub trait Command: Sync {
    fn name(&self) -> &'static str;

    fn about(&self) -> &'static str;

    /// Ids of the [`RunArgs`] fields this command reads, beyond the common ones.
    fn flags(&self) -> &'static [&'static str];

    /// Rendered output, newline-terminated.
    fn run(&self, args: &RunArgs) -> Result<String, CliError>;
}

pub struct Registry {
    commands: Vec<Box<dyn Command>>,
}

impl Registry {
    pub fn builtin() -> Self {
        let commands: Vec<Box<dyn Command>> = vec![
            Box::new(structure::Cycles),
            Box::new(structure::SpectrumCmd),
            Box::new(structure::Eigenspace),
            Box::new(structure::Entanglement),
            Box::new(structure::Projector),
            Box::new(structure::Partitions),
            Box::new(structure::Kernels),
            Box::new(scans::DimsScan),
            Box::new(scans::TraceDistanceScan),
            Box::new(scans::ChiScan),
            Box::new(scans::CoarseTable),
        ];
        Registry { commands }
    }

    pub fn get(&self, name: &str) -> Option<&dyn Command> {
        self.commands
            .iter()
            .find(|c| c.name() == name)
            .map(|c| c.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Command> {
        self.commands.iter().map(|c| c.as_ref())
    }
}
