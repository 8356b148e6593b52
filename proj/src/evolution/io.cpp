#include <array>
#include <bit>
#include <cstdint>
#include <cstring>

#include "wwlab/csv.hpp"
#include "wwlab/errors.hpp"
#include "wwlab/evolution/evolution.hpp"

namespace wwlab {
namespace {

constexpr std::array<char, 8> kMagic{'W', 'W', 'S', 'N', 'A', 'P', '0', '1'};

template <class U>
void put_le(std::ostream& os, U v) {
    for (std::size_t i = 0; i < sizeof(U); ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

template <class U>
U get_le(std::istream& is) {
    U v = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i) {
        const int c = is.get();
        if (c == std::char_traits<char>::eof()) throw ConfigError("truncated snapshot");
        v |= static_cast<U>(static_cast<unsigned char>(c)) << (8 * i);
    }
    return v;
}

}  // namespace

void write_ledger_csv(std::ostream& os, const std::vector<LedgerRow>& rows) {
    const bool g1 = !rows.empty() && rows.front().g1_l2.has_value();
    std::vector<std::string> header{"t", "energy", "w4_inf", "h_n", "xf_l2", "u_l2", "x_norm"};
    if (g1) {
        header.emplace_back("g1_l2");
        header.emplace_back("g1_xf");
    }
    CsvWriter csv(os, header);
    for (const auto& r : rows) {
        csv << r.t << r.energy << r.w4_inf << r.h_n << r.xf << r.l2 << r.x_norm;
        if (g1) csv << r.g1_l2.value_or(0.0) << r.g1_xf.value_or(0.0);
        csv.end_row();
    }
}

void write_pairs_csv(std::ostream& os, const std::vector<ScatteringPair>& pairs) {
    CsvWriter csv(os, {"s", "t", "profile_diff_l2"});
    for (const auto& p : pairs) {
        csv << p.s << p.t << p.diff;
        csv.end_row();
    }
}

void write_snapshot(std::ostream& os, const SpectralField& f, double t) {
    const auto& g = f.grid();
    os.write(kMagic.data(), kMagic.size());
    put_le(os, static_cast<std::uint32_t>(g.n()));
    put_le(os, std::bit_cast<std::uint64_t>(g.length()));
    put_le(os, std::bit_cast<std::uint64_t>(t));
    for (const cplx& c : f.coefficients()) {
        put_le(os, std::bit_cast<std::uint32_t>(static_cast<float>(c.real())));
        put_le(os, std::bit_cast<std::uint32_t>(static_cast<float>(c.imag())));
    }
    if (!os) throw ConfigError("failed to write snapshot");
}

Snapshot read_snapshot(std::istream& is) {
    std::array<char, 8> magic{};
    is.read(magic.data(), magic.size());
    if (!is || magic != kMagic) throw ConfigError("not a snapshot file");
    const auto n = get_le<std::uint32_t>(is);
    const double L = std::bit_cast<double>(get_le<std::uint64_t>(is));
    const double t = std::bit_cast<double>(get_le<std::uint64_t>(is));
    const FourierGrid grid(static_cast<int>(n), L);
    std::vector<cplx> c(grid.size());
    for (auto& v : c) {
        const float re = std::bit_cast<float>(get_le<std::uint32_t>(is));
        const float im = std::bit_cast<float>(get_le<std::uint32_t>(is));
        v = {re, im};
    }
    return {SpectralField::from_coefficients(grid, std::move(c)), t};
}

}  // namespace wwlab
