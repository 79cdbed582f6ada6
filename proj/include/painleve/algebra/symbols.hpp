#ifndef PAINLEVE_ALGEBRA_SYMBOLS_HPP
#define PAINLEVE_ALGEBRA_SYMBOLS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace painleve {

/// Interned symbol id. Ordering of ids fixes the canonical variable order
/// inside polynomials, so ids are stable for the lifetime of the process.
using Symbol = std::uint32_t;

/// Process-wide symbol table. Concurrent reads are lock-free once a symbol
/// exists; interning new names takes a writer lock.
class SymbolTable {
public:
    static SymbolTable& instance();

    Symbol intern(std::string_view name);
    const std::string& name(Symbol s) const;
    bool contains(std::string_view name) const;

private:
    SymbolTable() = default;
    struct Impl;
    Impl& impl() const;
};

inline Symbol sym(std::string_view name) { return SymbolTable::instance().intern(name); }
inline const std::string& sym_name(Symbol s) { return SymbolTable::instance().name(s); }

}  // namespace painleve

#endif
