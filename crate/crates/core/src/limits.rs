//! Resource guards.
//!
//! Defaults can be overridden with the `EDGEIDEAL_LIMITS` environment
//! variable, a comma separated list of `name=value` pairs, for example
//! `EDGEIDEAL_LIMITS=max_generators=500000,betti_vars=18`.

use std::sync::OnceLock;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Minimal generators of a computed ideal.
    pub max_generators: usize,
    /// Generators admitted by the linear-quotient ordering search.
    pub lq_generators: usize,
    /// Faces of a complex whose homology is computed.
    pub max_faces: usize,
    /// Variables admitted by the Betti table computation.
    pub betti_vars: usize,
    /// Facets admitted by the shellability search.
    pub shell_facets: usize,
    /// Vertices admitted by cover and matching enumeration.
    pub cover_vertices: usize,
    /// Vertices admitted by the minor enumeration of the packing test.
    pub packing_vertices: usize,
    /// Vertices admitted by induced-subgraph and submatrix scans.
    pub scan_vertices: usize,
    /// Vertices admitted by the odd hole / antihole scan.
    pub perfect_vertices: usize,
    /// Variables admitted by polyhedral vertex enumeration.
    pub polyhedra_vertices: usize,
    /// Smaller side of a matrix admitted by the unimodularity test.
    pub tu_dim: usize,
    /// Vertices admitted by the constructive associated-prime procedure.
    pub ass_star_vertices: usize,
    /// Irreducible components kept during decomposition.
    pub max_components: usize,
    /// Support size admitted by associated-prime enumeration.
    pub ass_vars: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_generators: 200_000,
            lq_generators: 12,
            max_faces: 1 << 20,
            betti_vars: 16,
            shell_facets: 18,
            cover_vertices: 24,
            packing_vertices: 14,
            scan_vertices: 14,
            perfect_vertices: 12,
            polyhedra_vertices: 12,
            tu_dim: 12,
            ass_star_vertices: 14,
            max_components: 200_000,
            ass_vars: 20,
        }
    }
}

impl Limits {
    /// Applies `name=value` overrides; unknown names and bad values are errors.
    pub fn with_overrides(mut self, text: &str) -> Result<Self, String> {
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, value) = item
                .split_once('=')
                .ok_or_else(|| format!("expected name=value, got `{item}`"))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| format!("bad value in `{item}`"))?;
            let slot = match name.trim() {
                "max_generators" => &mut self.max_generators,
                "lq_generators" => &mut self.lq_generators,
                "max_faces" => &mut self.max_faces,
                "betti_vars" => &mut self.betti_vars,
                "shell_facets" => &mut self.shell_facets,
                "cover_vertices" => &mut self.cover_vertices,
                "packing_vertices" => &mut self.packing_vertices,
                "scan_vertices" => &mut self.scan_vertices,
                "perfect_vertices" => &mut self.perfect_vertices,
                "polyhedra_vertices" => &mut self.polyhedra_vertices,
                "tu_dim" => &mut self.tu_dim,
                "ass_star_vertices" => &mut self.ass_star_vertices,
                "max_components" => &mut self.max_components,
                "ass_vars" => &mut self.ass_vars,
                other => return Err(format!("unknown limit `{other}`")),
            };
            *slot = value;
        }
        Ok(self)
    }

    /// Process-wide limits: defaults plus `EDGEIDEAL_LIMITS`, read once.
    ///
    /// A malformed variable is reported on stderr and ignored.
    pub fn get() -> &'static Limits {
        static LIMITS: OnceLock<Limits> = OnceLock::new();
        LIMITS.get_or_init(|| match std::env::var("EDGEIDEAL_LIMITS") {
            Ok(text) => Limits::default().with_overrides(&text).unwrap_or_else(|e| {
                eprintln!("ignoring EDGEIDEAL_LIMITS: {e}");
                Limits::default()
            }),
            Err(_) => Limits::default(),
        })
    }
}
