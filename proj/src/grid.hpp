#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace relgrid {

enum class Action : int { up = 0, down = 1, left = 2, right = 3 };
constexpr int kNumActions = 4;

const char* action_name(Action a);

struct Pos {
    int row = 0;
    int col = 0;
    bool operator==(const Pos& o) const { return row == o.row && col == o.col; }
    bool operator!=(const Pos& o) const { return !(*this == o); }
};

// One step in the action's direction, no bounds handling.
Pos moved(Pos p, Action a);

// Cell content. `kind` is an environment-specific enumeration (0 = empty),
// `aux` carries the color index / teleport pair id where relevant.
struct Cell {
    uint8_t kind = 0;
    uint8_t aux = 0;
};

enum class TermCause : uint8_t { none = 0, timeout, gem, terminal, pit };

const char* term_cause_name(TermCause c);

// Authoritative discrete world state shared by both environments.
struct Grid {
    int width = 0;
    int height = 0;
    std::vector<Cell> cells;
    Pos agent;
    int step_count = 0;
    bool done = false;
    TermCause cause = TermCause::none;
    uint64_t seed = 0;

    Grid() = default;
    Grid(int h, int w) : width(w), height(h), cells((size_t)h * w) {}

    bool in_bounds(Pos p) const {
        return p.row >= 0 && p.row < height && p.col >= 0 && p.col < width;
    }
    Cell& at(Pos p) { return cells[(size_t)p.row * width + p.col]; }
    const Cell& at(Pos p) const { return cells[(size_t)p.row * width + p.col]; }
    Cell& at(int r, int c) { return cells[(size_t)r * width + c]; }
    const Cell& at(int r, int c) const { return cells[(size_t)r * width + c]; }
};

struct Rgb {
    float r = 0, g = 0, b = 0;
    bool operator==(const Rgb& o) const { return r == o.r && g == o.g && b == o.b; }
};

// Rendered per-cell image, row-major, channel-last, values in [0, 1].
struct Observation {
    int height = 0;
    int width = 0;
    int channels = 0;
    std::vector<float> data;

    Observation() = default;
    Observation(int h, int w, int c) : height(h), width(w), channels(c), data((size_t)h * w * c) {}

    float& at(int r, int c, int ch) { return data[((size_t)r * width + c) * channels + ch]; }
    float at(int r, int c, int ch) const { return data[((size_t)r * width + c) * channels + ch]; }
    void set(int r, int c, Rgb v) {
        at(r, c, 0) = v.r;
        at(r, c, 1) = v.g;
        at(r, c, 2) = v.b;
    }
};

struct StepResult {
    Observation obs;
    double reward = 0;
    bool done = false;
    std::map<std::string, std::string> info;
};

class EnvError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Common environment surface consumed by the trainer, oracle and commands.
// Instances are single-owner and value-copyable through clone(); all
// randomness flows from the seed passed to reset().
class GridEnv {
public:
    virtual ~GridEnv() = default;

    virtual Observation reset(uint64_t seed) = 0;
    virtual StepResult step(Action a) = 0;
    virtual Observation render() const = 0;

    virtual const Grid& grid() const = 0;
    virtual int max_steps() const = 0;
    virtual int channels() const { return 3; }
    virtual TermCause positive_terminal() const = 0;
    virtual std::string name() const = 0;

    // Augmented-state signature for search: agent position plus all
    // reward-relevant inventory/consumption state, excluding step_count.
    virtual uint64_t state_key() const = 0;

    virtual std::unique_ptr<GridEnv> clone() const = 0;

    bool done() const { return grid().done; }
    bool succeeded() const { return grid().done && grid().cause == positive_terminal(); }
};

// Shared step bookkeeping: precondition check and timeout handling.
// Environments call begin_step() first and finish_step() after applying
// their interaction; finish_step() enforces the episode cap L.
void begin_step(Grid& g);
void finish_step(Grid& g, int max_steps);

// Layout samplers retry a bounded number of times before giving up.
constexpr int kGenerateRetries = 100;

} // namespace relgrid
