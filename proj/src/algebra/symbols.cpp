#include "painleve/algebra/symbols.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace painleve {

struct SymbolTable::Impl {
    mutable std::shared_mutex mutex;
    std::vector<std::string> names;
    std::unordered_map<std::string, Symbol> index;
};

SymbolTable& SymbolTable::instance() {
    static SymbolTable table;
    return table;
}

SymbolTable::Impl& SymbolTable::impl() const {
    static Impl impl;
    return impl;
}

Symbol SymbolTable::intern(std::string_view name) {
    auto& im = impl();
    {
        std::shared_lock lock(im.mutex);
        auto it = im.index.find(std::string(name));
        if (it != im.index.end()) return it->second;
    }
    std::unique_lock lock(im.mutex);
    auto [it, inserted] = im.index.try_emplace(std::string(name), static_cast<Symbol>(im.names.size()));
    if (inserted) im.names.emplace_back(name);
    return it->second;
}

const std::string& SymbolTable::name(Symbol s) const {
    auto& im = impl();
    std::shared_lock lock(im.mutex);
    if (s >= im.names.size()) throw std::out_of_range("unknown symbol id");
    return im.names[s];
}

bool SymbolTable::contains(std::string_view name) const {
    auto& im = impl();
    std::shared_lock lock(im.mutex);
    return im.index.count(std::string(name)) > 0;
}

}  // namespace painleve
