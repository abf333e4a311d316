#pragma once

// Catch2 glue: readable failure messages for library value types.

#include <catch_amalgamated.hpp>

#include <charfact/characters.hpp>

template <>
struct Catch::StringMaker<charfact::LaurentPoly> {
    static std::string convert(const charfact::LaurentPoly& p) { return p.to_string(); }
};

template <>
struct Catch::StringMaker<charfact::CycInt> {
    static std::string convert(const charfact::CycInt& c) { return c.to_string(); }
};

template <>
struct Catch::StringMaker<charfact::Partition> {
    static std::string convert(const charfact::Partition& p) { return charfact::to_display(p); }
};
