#pragma once

#include <array>

// Zigzag (up/down) numbers E_0..E_27; the tail no longer fits in 64 bits.
inline constexpr std::array<const char*, 28> a000111_values{
    "1",
    "1",
    "1",
    "2",
    "5",
    "16",
    "61",
    "272",
    "1385",
    "7936",
    "50521",
    "353792",
    "2702765",
    "22368256",
    "199360981",
    "1903757312",
    "19391512145",
    "209865342976",
    "2404879675441",
    "29088885112832",
    "370371188237525",
    "4951498053124096",
    "69348874393137901",
    "1015423886506852352",
    "15514534163557086905",
    "246921480190207983616",
    "4087072509293123892361",
    "70251601603943959887872",
};
