//! Text REPL for the eviction game against the solver.

use std::io::{BufRead, Write};

use evictlab::game::{
    attacker_certificate, enumerate_dominating_sets, extract_eviction_family, heuristic_attack, AttackCertificate,
    GameAnalysis, GreedyResponder, Limits, Responder, Rules, StrategyFamily,
};
use evictlab::{Graph, VertexSet};

use crate::error::{CliError, CliResult};

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Role {
    /// You attack; the engine defends.
    Attacker,
    /// You defend; the engine attacks.
    Defender,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlayOutcome {
    /// Some vertex went undominated after `rounds` attacks.
    AttackerWon { rounds: usize },
    /// Input ended or the player quit after `rounds` attacks.
    Stopped { rounds: usize },
    /// Every guard is surrounded, so no attack can change the position.
    Static { rounds: usize },
}

/// Text board: one column per vertex, `G` for a guard, `G*` for a
/// surrounded guard, `.` for an empty vertex.
pub fn render_board(g: &Graph, d: VertexSet) -> String {
    let mut top = String::from("vertex");
    let mut bottom = String::from("guard ");
    for v in 0..g.n() {
        let mark = match (d.contains(v), g.closed_neighborhood(v).is_subset(d)) {
            (false, _) => ".",
            (true, false) => "G",
            (true, true) => "G*",
        };
        top.push_str(&format!(" {v:>3}"));
        bottom.push_str(&format!(" {mark:>3}"));
    }
    format!("{top}\n{bottom}\nguards on {d}\n")
}

enum Command {
    Quit,
    Help,
    Board,
    Numbers(Vec<usize>),
}

fn parse_command(line: &str) -> Result<Command, String> {
    match line.trim() {
        "q" | "quit" | "exit" => Ok(Command::Quit),
        "h" | "help" | "?" => Ok(Command::Help),
        "b" | "board" => Ok(Command::Board),
        other => other
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| format!("not a vertex number: {t:?}")))
            .collect::<Result<Vec<_>, _>>()
            .and_then(|v| if v.is_empty() { Err("enter a vertex number".to_string()) } else { Ok(v) })
            .map(Command::Numbers),
    }
}

struct Session<'a, R, W> {
    g: &'a Graph,
    input: R,
    out: W,
}

impl<R: BufRead, W: Write> Session<'_, R, W> {
    fn say(&mut self, text: impl AsRef<str>) -> CliResult<()> {
        writeln!(self.out, "{}", text.as_ref())?;
        Ok(())
    }

    /// Reads commands until one parses; `None` at end of input or on quit.
    fn ask(&mut self, prompt: &str, d: VertexSet, help: &str) -> CliResult<Option<Vec<usize>>> {
        loop {
            write!(self.out, "{prompt}> ")?;
            self.out.flush()?;
            let mut line = String::new();
            if self.input.read_line(&mut line)? == 0 {
                self.say("")?;
                return Ok(None);
            }
            match parse_command(&line) {
                Ok(Command::Quit) => return Ok(None),
                Ok(Command::Help) => self.say(help)?,
                Ok(Command::Board) => self.say(render_board(self.g, d))?,
                Ok(Command::Numbers(v)) => return Ok(Some(v)),
                Err(msg) => self.say(msg)?,
            }
        }
    }

    fn undominated(&self, d: VertexSet) -> Option<usize> {
        (self.g.vertices() - self.g.dominated_by(d)).first()
    }
}

const ATTACKER_HELP: &str = "enter an occupied vertex to attack it; `board` redraws, `quit` stops";
const DEFENDER_HELP: &str = "enter the vertex the attacked guard moves to; `board` redraws, `quit` stops";
const PLACE_HELP: &str = "enter the starting vertices of your guards, separated by spaces";

/// Runs a game of eviction with `k` guards; the human takes `role`.
pub fn play<R: BufRead, W: Write>(g: &Graph, k: usize, role: Role, input: R, out: W) -> CliResult<PlayOutcome> {
    let analysis = GameAnalysis::new(g, k, Rules::Eviction, &Limits::default())
        .map_err(|e| CliError::from(e).context(format!("cannot solve this graph with {k} guards")))?;
    let Some(first_dominating) = enumerate_dominating_sets(g, k).into_iter().next() else {
        return Err(CliError::parse(format!("{k} guards cannot dominate this graph")));
    };
    let mut s = Session { g, input, out };
    match role {
        Role::Attacker => human_attacks(&mut s, &analysis, first_dominating),
        Role::Defender => human_defends(&mut s, &analysis),
    }
}

fn human_attacks<R: BufRead, W: Write>(
    s: &mut Session<'_, R, W>,
    analysis: &GameAnalysis,
    fallback_start: VertexSet,
) -> CliResult<PlayOutcome> {
    let g = s.g;
    let k = analysis.k();
    let (mut engine, start): (Box<dyn Responder>, VertexSet) = if analysis.defender_wins() {
        let family: StrategyFamily = extract_eviction_family(g, k)?;
        let start = *family.family.iter().next().expect("winning family is nonempty");
        s.say(format!("The engine defends with {k} guards using a winning strategy."))?;
        (Box::new(family), start)
    } else {
        s.say(format!("No defence with {k} guards survives forever; the engine defends greedily."))?;
        (Box::new(GreedyResponder), fallback_start)
    };
    let mut d = start;
    let mut rounds = 0;
    s.say(render_board(g, d))?;
    loop {
        let Some(nums) = s.ask("attack", d, ATTACKER_HELP)? else {
            return Ok(PlayOutcome::Stopped { rounds });
        };
        let [v] = nums[..] else {
            s.say("attack one vertex at a time")?;
            continue;
        };
        if v >= g.n() {
            s.say(format!("there is no vertex {v}; vertices are 0..{}", g.n() - 1))?;
            continue;
        }
        if !d.contains(v) {
            s.say(format!("vertex {v} has no guard: only vertices containing a guard may be attacked"))?;
            continue;
        }
        rounds += 1;
        if g.closed_neighborhood(v).is_subset(d) {
            s.say(format!("the guard on {v} is surrounded and stays"))?;
            continue;
        }
        let Some(next) = engine.respond(g, Rules::Eviction, d, v) else {
            s.say("the engine has no legal move")?;
            return Ok(PlayOutcome::AttackerWon { rounds });
        };
        let to = (next - d).first().expect("a guard moved");
        s.say(format!("the guard on {v} moves to {to}"))?;
        d = next;
        s.say(render_board(g, d))?;
        if let Some(x) = s.undominated(d) {
            s.say(format!("vertex {x} is undominated: you win after {rounds} attacks"))?;
            return Ok(PlayOutcome::AttackerWon { rounds });
        }
    }
}

enum EngineAttacker<'a> {
    Certificate(AttackCertificate),
    Heuristic(&'a GameAnalysis),
}

fn human_defends<R: BufRead, W: Write>(s: &mut Session<'_, R, W>, analysis: &GameAnalysis) -> CliResult<PlayOutcome> {
    let g = s.g;
    let k = analysis.k();
    let engine = if analysis.defender_wins() {
        s.say(format!(
            "{k} guards can defend this graph forever. The engine has no winning plan and attacks heuristically, \
             choosing the guard whose moves leave the fewest safe positions."
        ))?;
        EngineAttacker::Heuristic(analysis)
    } else {
        let cert = attacker_certificate(g, k, Rules::Eviction, &Limits::default())?;
        s.say(format!("The engine attacks from a certificate and wins within {} attacks.", cert.depth()))?;
        EngineAttacker::Certificate(cert)
    };

    s.say(render_board(g, VertexSet::EMPTY))?;
    let mut d = loop {
        let Some(nums) = s.ask(&format!("place {k} guards"), VertexSet::EMPTY, PLACE_HELP)? else {
            return Ok(PlayOutcome::Stopped { rounds: 0 });
        };
        let set: VertexSet = nums.iter().copied().filter(|&v| v < g.n()).collect();
        if nums.iter().any(|&v| v >= g.n()) {
            s.say(format!("vertices are 0..{}", g.n() - 1))?;
        } else if set.len() != k || nums.len() != k {
            s.say(format!("place exactly {k} guards on distinct vertices"))?;
        } else if let Some(x) = s.undominated(set) {
            s.say(format!("vertex {x} would be undominated; the guards must dominate the graph"))?;
        } else {
            break set;
        }
    };
    s.say(render_board(g, d))?;

    let mut rounds = 0;
    loop {
        let attack = match &engine {
            EngineAttacker::Certificate(cert) => cert.attack_for(d),
            EngineAttacker::Heuristic(a) => heuristic_attack(g, a, d),
        };
        let Some(v) = attack else {
            return Ok(PlayOutcome::Static { rounds });
        };
        rounds += 1;
        if g.closed_neighborhood(v).is_subset(d) {
            s.say(format!("the engine attacks {v}; every guard is surrounded, so nothing can change"))?;
            return Ok(PlayOutcome::Static { rounds });
        }
        let options = g.neighbors(v) - d;
        s.say(format!("the engine attacks {v}; the guard may move to {options}"))?;
        let to = loop {
            let Some(nums) = s.ask(&format!("move {v} to"), d, DEFENDER_HELP)? else {
                return Ok(PlayOutcome::Stopped { rounds });
            };
            match nums[..] {
                [w] if options.contains(w) => break w,
                [w] => s.say(format!("{w} is not an unoccupied neighbour of {v}; choose from {options}"))?,
                _ => s.say("name a single vertex")?,
            }
        };
        d = d.without(v).with(to);
        s.say(render_board(g, d))?;
        if let Some(x) = s.undominated(d) {
            s.say(format!("vertex {x} is undominated: the engine wins after {rounds} attacks"))?;
            return Ok(PlayOutcome::AttackerWon { rounds });
        }
    }
}
