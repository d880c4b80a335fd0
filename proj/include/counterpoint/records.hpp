#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "counterpoint/common.hpp"

namespace counterpoint::ingest {

/// Token amounts stay in integer base units (wei scale) until feature
/// derivation. 64 bits cannot hold hourly value volumes at wei scale,
/// so amounts are 128-bit.
using Amount = __int128;

inline std::string amount_to_string(Amount v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    char buf[48];
    int pos = 48;
    while (u > 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    std::string s;
    if (neg) s.push_back('-');
    s.append(buf + pos, 48 - pos);
    return s;
}

inline Amount parse_amount(std::string_view text, bool& ok) {
    ok = false;
    if (text.empty()) return 0;
    bool neg = text[0] == '-';
    std::size_t i = neg ? 1 : 0;
    if (i >= text.size()) return 0;
    unsigned __int128 u = 0;
    const unsigned __int128 max_mag =
        neg ? (static_cast<unsigned __int128>(1) << 127)
            : (static_cast<unsigned __int128>(1) << 127) - 1;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') return 0;
        u = u * 10 + static_cast<unsigned>(c - '0');
        if (u > max_mag) return 0;
    }
    ok = true;
    if (neg) return -static_cast<Amount>(u - 1) - 1;
    return static_cast<Amount>(u);
}

inline double amount_to_eth(Amount v) {
    return static_cast<double>(v) / kWeiPerEth;
}

struct BlockRecord {
    std::int64_t number = 0;
    std::int64_t timestamp = 0;       // epoch seconds
    std::int64_t gas_limit = 0;
    std::int64_t gas_used = 0;
    std::int64_t difficulty = 0;
    std::int64_t size_bytes = 0;
    Amount miner_reward = 0;          // wei
    Amount fees_total = 0;            // wei
};

struct TxRecord {
    std::int64_t block_number = 0;
    std::string from_addr;
    std::string to_addr;
    Amount value = 0;                 // wei
    Amount gas_price = 0;             // wei per gas unit
    std::int64_t gas_used = 0;
};

enum class PoolEventKind { Mint, Burn, Swap };

inline const char* pool_kind_name(PoolEventKind k) {
    switch (k) {
        case PoolEventKind::Mint: return "mint";
        case PoolEventKind::Burn: return "burn";
        case PoolEventKind::Swap: return "swap";
    }
    return "?";
}

struct PoolEvent {
    std::int64_t timestamp = 0;
    std::string pool_id;
    PoolEventKind kind = PoolEventKind::Swap;
    Amount eth_delta = 0;             // signed
    Amount stable_delta = 0;          // signed
    Amount liquidity_after = 0;       // >= 0
};

struct PriceCandle {
    std::int64_t timestamp = 0;       // hour aligned
    double close = 0.0;               // USD per token
    double volume = 0.0;              // token amount
};

}  // namespace counterpoint::ingest
