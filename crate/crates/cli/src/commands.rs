use std::fs::{self, File};
use std::io::{BufWriter, Write};

use filament_core::curvegeom::{bracket, bracket_arc, pf_hierarchy_with_limit, phi_hom, rho_of};
use filament_core::derivations::commutator;
use filament_core::exprio::{parse, parse_field, print, print_field, print_functional};
use filament_core::hamiltonian::{
    check_bihamiltonian, mkdv_hierarchy, poisson_pi1, HamiltonianPair,
};
use filament_core::random::{self, PolyShape};
use filament_core::Error as CoreError;
use filament_sim::output::{write_csv, write_json, write_manifest, write_svg};
use filament_sim::{simulate, RunConfig};

use crate::args::{Format, SimulateArgs};
use crate::error::CliError;

pub fn hierarchy(out: &mut impl Write, n: usize, depth_cap: usize) -> Result<(), CliError> {
    if n > depth_cap {
        return Err(CliError::Usage(format!(
            "depth {n} exceeds --depth-cap {depth_cap} (raise it, up to 8)"
        )));
    }
    let fields = pf_hierarchy_with_limit(n, depth_cap)?;
    for (j, v) in fields.iter().enumerate() {
        writeln!(out, "V{j} = {}", print_field(v.field()))?;
    }
    for (j, v) in fields.iter().enumerate() {
        writeln!(out, "a{j} = {}", print(phi_hom(v).at_flat().poly()))?;
    }
    writeln!(out, "sigma = {}", check_bihamiltonian().sigma.unwrap_or(1))?;
    Ok(())
}

fn tally(out: &mut impl Write, label: &str, passed: usize, cases: usize) -> Result<bool, CliError> {
    let verdict = if passed == cases { "ok" } else { "FAILED" };
    writeln!(out, "{label}: {passed}/{cases} {verdict}")?;
    Ok(passed == cases)
}

/// Runs every identity and reports one line per law; fails if any law fails.
pub fn check(out: &mut impl Write, seed: u64, cases: usize) -> Result<(), CliError> {
    let mut ok = true;

    let flows = mkdv_hierarchy(3)?;
    let nonzero: Vec<String> = (0..flows.len())
        .flat_map(|i| (0..flows.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| !commutator(&flows[i], &flows[j]).is_zero())
        .map(|(i, j)| format!("[a{i}, a{j}]"))
        .collect();
    if nonzero.is_empty() {
        writeln!(out, "commutators [0..3]x[0..3]: all zero")?;
    } else {
        writeln!(
            out,
            "commutators [0..3]x[0..3]: nonzero {}",
            nonzero.join(" ")
        )?;
        ok = false;
    }

    let mut rng = random::rng(seed);
    let shape = PolyShape::small().with_g(0.3);
    let mut jacobi = 0;
    for _ in 0..cases {
        let [a, b, c] = [(); 3].map(|_| random::field(&mut rng, &shape));
        let sum = &(&bracket(&a, &bracket(&b, &c)) + &bracket(&b, &bracket(&c, &a)))
            + &bracket(&c, &bracket(&a, &b));
        jacobi += usize::from(sum.is_zero());
    }
    ok &= tally(out, "jacobi", jacobi, cases)?;

    let (mut closed, mut hom) = (0, 0);
    for _ in 0..cases {
        let v = random::arc_field(&mut rng, &shape);
        let w = random::arc_field(&mut rng, &shape);
        closed += usize::from(rho_of(&bracket(v.field(), w.field())).is_zero());
        let lhs = phi_hom(&bracket_arc(&v, &w));
        hom += usize::from(lhs == commutator(&phi_hom(&v), &phi_hom(&w)));
    }
    ok &= tally(out, "closure rho([v,w]) = 0", closed, cases)?;
    ok &= tally(out, "homomorphism Phi([v,w]) = [Phi v, Phi w]", hom, cases)?;

    let pair = HamiltonianPair::default();
    let report = check_bihamiltonian();
    writeln!(out, "H0 = {}", print_functional(&pair.h0))?;
    writeln!(out, "H1 = {}", print_functional(&pair.h1))?;
    writeln!(out, "pi1(dH0) = {}", report.c1)?;
    writeln!(out, "pi0(dH1) = {}", report.c0)?;
    writeln!(out, "pi1(dH0) is mKdV: {}", report.c1_is_mkdv)?;
    ok &= report.c1_is_mkdv;
    match report.sigma {
        Some(-1) => writeln!(out, "sigma = -1 (paper sign note)")?,
        Some(s) => writeln!(out, "sigma = {s}")?,
        None => {
            writeln!(out, "sigma: pi1(dH0) and pi0(dH1) are not proportional")?;
            ok = false;
        }
    }

    let involution = poisson_pi1(&pair.h0, &pair.h1)?;
    writeln!(
        out,
        "involution {{H0, H1}}_pi1 = {}",
        if involution.is_zero() {
            "0".to_string()
        } else {
            print_functional(&involution)
        }
    )?;
    ok &= involution.is_zero();

    if ok {
        Ok(())
    } else {
        Err(CliError::CheckFailed("identity suite failed".into()))
    }
}

pub fn euler(out: &mut impl Write, expr: &str) -> Result<(), CliError> {
    writeln!(out, "{}", print(&parse(expr)?.euler_derivative()))?;
    Ok(())
}

pub fn integrate(out: &mut impl Write, expr: &str) -> Result<(), CliError> {
    match parse(expr)?.antiderivative() {
        Ok(q) => writeln!(out, "{}", print(&q))?,
        Err(e @ CoreError::NotExact { .. }) => {
            if let CoreError::NotExact { witness, .. } = &e {
                writeln!(out, "not exact; Euler witness: {}", print(witness))?;
            }
            return Err(e.into());
        }
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

pub fn bracket_cmd(out: &mut impl Write, v: &str, w: &str) -> Result<(), CliError> {
    let (v, w) = (parse_field(v)?, parse_field(w)?);
    writeln!(out, "{}", print_field(&bracket(&v, &w)))?;
    Ok(())
}

fn flag(ok: bool, holds: &str, fails: &str) -> String {
    if ok { holds } else { fails }.to_string()
}

pub fn simulate_cmd(out: &mut impl Write, args: &SimulateArgs) -> Result<(), CliError> {
    let mut config: RunConfig = args.preset.config();
    config.n = args.nodes.unwrap_or(config.n);
    config.length = args.length.unwrap_or(config.length);
    config.dt = args.dt.unwrap_or(config.dt);
    config.t_final = args.t_final.unwrap_or(config.t_final);
    config.seed = args.seed;
    config.level = usize::from(args.n);
    config.frames = usize::from(args.frames);

    let run = simulate(&config)?;
    fs::create_dir_all(&args.out)?;
    write_manifest(
        BufWriter::new(File::create(args.out.join("manifest.json"))?),
        &run,
    )?;
    let data = match args.format {
        Format::Csv => {
            let path = args.out.join("trajectory.csv");
            write_csv(BufWriter::new(File::create(&path)?), &run.frames)?;
            path
        }
        Format::Json => {
            let path = args.out.join("run.json");
            write_json(BufWriter::new(File::create(&path)?), &run)?;
            path
        }
        Format::Svg => {
            let path = args.out.join("curves.svg");
            write_svg(BufWriter::new(File::create(&path)?), &run.frames)?;
            path
        }
    };

    let s = &run.summary;
    let c = &s.conservation;
    writeln!(
        out,
        "preset {}: N = {}, L = {}, dt = {:e}, T = {}, steps = {}",
        config.preset, config.n, config.length, config.dt, config.t_final, s.steps
    )?;
    writeln!(out, "characteristic: k_t = {}", s.characteristic)?;
    writeln!(out, "field: {}", s.field)?;
    writeln!(
        out,
        "{} (relative {:.3e})",
        flag(c.h0_drift <= 1e-6, "H0 drift <= 1e-6", "H0 drift > 1e-6"),
        c.h0_drift
    )?;
    writeln!(out, "H1 drift: {:.3e} (relative)", c.h1_drift)?;
    writeln!(
        out,
        "{} ({:.3e})",
        flag(c.tk_drift <= 1e-10, "TK drift <= 1e-10", "TK drift > 1e-10"),
        c.tk_drift
    )?;
    if let Some(v) = &s.velocity {
        writeln!(
            out,
            "velocity residual: max {:.3e}, rms {:.3e} (frame spacing {:e})",
            v.max_residual, v.rms_residual, v.spacing
        )?;
    }
    writeln!(out, "speed deviation: {:.3e}", s.speed_deviation)?;
    writeln!(out, "curvature change: {:.3e}", s.curvature_change)?;
    writeln!(out, "stationary: {}", s.stationary)?;
    writeln!(
        out,
        "wrote {} and {}",
        args.out.join("manifest.json").display(),
        data.display()
    )?;
    Ok(())
}
