#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace distill
{

enum class Protocol
{
    fifteen_to_one,     // "15to1"
    fifteen_squared,    // "15to1x15to1"
    zero_plus_one,      // "0plus1"
};

std::string to_string(Protocol p);
Protocol parse_protocol(std::string_view name);

// Z-type product on qubits 1..5; qubit i is bit (i-1).
struct PauliAxis
{
    std::uint8_t mask = 0;

    static PauliAxis of(std::initializer_list<int> qubits);

    int weight() const;
    bool acts_on(int qubit) const { return (mask >> (qubit - 1)) & 1; }
    bool in_gamma() const { return mask != 0 && mask < 32 && weight() % 2 == 1; }
    std::string label() const;  // e.g. "Z1Z3Z5"

    bool operator==(const PauliAxis&) const = default;
    auto operator<=>(const PauliAxis&) const = default;
};

constexpr std::uint8_t Z1_MASK = 1;

// Gamma without Z1, in ascending mask order.
const std::vector<PauliAxis>& rotation_axes();

enum class Mechanism
{
    faulty_t_measurement,
    injection_autocorrect,
    teleport_target,
};

enum class AncillaRegion
{
    top,
    bottom,
    none,
};

std::string to_string(Mechanism m);
std::string to_string(AncillaRegion r);

struct RotationOp
{
    PauliAxis axis;
    Mechanism mechanism;
    AncillaRegion region;
};

struct RoundSchedule
{
    Protocol protocol;
    std::vector<std::vector<RotationOp>> rounds;
};

struct Violation
{
    int round;  // 1-based, 0 when the constraint spans the whole schedule
    std::string constraint;
    std::string detail;
};

RoundSchedule build_schedule(Protocol p);
std::vector<Violation> validate_schedule(const RoundSchedule& s);

// Order in which the cells touched by `op` sit along its ancilla region.
// Entries are data-qubit indices 1..5; MAGIC_CELL marks the cell that
// supplies the pi/8 rotation (faulty-T strip or auto-correction block).
constexpr int MAGIC_CELL = 0;
std::vector<int> participant_order(Protocol p, const RotationOp& op);

////////////////////////////////////////////////////////////

struct DistanceParams
{
    int d_x = 1;
    int d_z = 1;
    int d_m = 1;
    int h = 1;

    bool operator==(const DistanceParams&) const = default;
};

struct FactoryConfig
{
    Protocol protocol = Protocol::fifteen_to_one;
    DistanceParams params;
    std::optional<DistanceParams> first_level;  // 15to1x15to1 only
};

// Fills d_m = d_z and, for the baseline protocols, h = d_x.
DistanceParams make_params(Protocol p, int d_x, int d_z, std::optional<int> h = std::nullopt);
FactoryConfig make_config(Protocol p, int d_x, int d_z, std::optional<int> h = std::nullopt);
FactoryConfig make_two_level_config(int d_x2, int d_z2, int d_x1, int d_z1);

// Throws std::invalid_argument naming the broken invariant.
void validate_config(const FactoryConfig& cfg);

enum class RegionRole
{
    data_qubit,
    ancilla_region,
    autocorrect_block,
    zero_level_block,
    faulty_t_strip,
    transfer_bus,
};

std::string to_string(RegionRole r);

// Rectangle in patch-cell units; one cell holds two physical qubits.
struct Region
{
    RegionRole role;
    std::string label;
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t w = 0;
    std::int64_t h = 0;

    std::int64_t area() const { return w * h; }
    bool overlaps(const Region& o) const;
};

struct FactoryLayout
{
    std::vector<Region> regions;

    std::int64_t cells() const;
    std::int64_t qubits() const { return 2 * cells(); }
};

inline constexpr int ZERO_PLUS_ONE_EPILOGUE_CYCLES = 2;

// Rotations consumed per second-level round in the two-level pipeline.
inline constexpr int TWO_LEVEL_OPS_PER_ROUND = 2;

int first_level_factory_count(const FactoryConfig& cfg, double first_level_accept = 1.0);

FactoryLayout build_layout(const FactoryConfig& cfg, double first_level_accept = 1.0);
std::int64_t footprint(const FactoryConfig& cfg, double first_level_accept = 1.0);
long duration(const FactoryConfig& cfg);

}  // namespace distill
