#pragma once
#include <compare>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace iso4d {

struct iso4d_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation hit a vanishing denominator; callers typically resample.
struct pole_error : iso4d_error {
    using iso4d_error::iso4d_error;
};

// Limit at s=0 does not exist; `order` is the pole order in s.
struct pole_order_error : iso4d_error {
    int order;
    pole_order_error(const std::string& msg, int ord) : iso4d_error(msg), order(ord) {}
};

struct parse_error : iso4d_error {
    using iso4d_error::iso4d_error;
};

// Interned symbol name.  A Symbol is an index into a process-wide table,
// so comparisons inside polynomial code are integer comparisons.
class Symbol {
public:
    Symbol() : id_(-1) {}
    explicit Symbol(int id) : id_(id) {}
    int id() const { return id_; }
    bool valid() const { return id_ >= 0; }
    const std::string& name() const;
    auto operator<=>(const Symbol&) const = default;

private:
    int id_;
};

namespace detail {
struct SymbolTable {
    std::vector<std::string> names;
    std::map<std::string, int> ids;
    std::mutex mu;
    static SymbolTable& instance() {
        static SymbolTable t;
        return t;
    }
};
}  // namespace detail

inline Symbol sym(const std::string& name) {
    auto& t = detail::SymbolTable::instance();
    std::lock_guard<std::mutex> lk(t.mu);
    auto it = t.ids.find(name);
    if (it != t.ids.end()) return Symbol(it->second);
    int id = static_cast<int>(t.names.size());
    t.names.push_back(name);
    t.ids.emplace(name, id);
    return Symbol(id);
}

inline const std::string& Symbol::name() const {
    auto& t = detail::SymbolTable::instance();
    std::lock_guard<std::mutex> lk(t.mu);
    return t.names.at(static_cast<size_t>(id_));
}

}  // namespace iso4d
