#include "grid.hpp"

namespace relgrid {

const char* action_name(Action a) {
    switch (a) {
    case Action::up: return "up";
    case Action::down: return "down";
    case Action::left: return "left";
    case Action::right: return "right";
    }
    return "?";
}

Pos moved(Pos p, Action a) {
    switch (a) {
    case Action::up: return {p.row - 1, p.col};
    case Action::down: return {p.row + 1, p.col};
    case Action::left: return {p.row, p.col - 1};
    case Action::right: return {p.row, p.col + 1};
    }
    return p;
}

const char* term_cause_name(TermCause c) {
    switch (c) {
    case TermCause::none: return "none";
    case TermCause::timeout: return "timeout";
    case TermCause::gem: return "gem";
    case TermCause::terminal: return "terminal";
    case TermCause::pit: return "pit";
    }
    return "?";
}

void begin_step(Grid& g) {
    if (g.done) throw EnvError("step on a finished episode");
    g.step_count += 1;
}

void finish_step(Grid& g, int max_steps) {
    if (!g.done && g.step_count >= max_steps) {
        g.done = true;
        g.cause = TermCause::timeout;
    }
}

} // namespace relgrid
