#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tcat {

// Universal immutable value for elements of computable sets: a finite tagged
// tree.  Structural equality and a total order are decidable, so every
// constructed set can be kept in canonical sorted form.
class Element {
public:
    enum class Kind { Atom, Tuple, Tag, List };

    Element();  // Atom("")
    static Element atom(std::string name);
    static Element tuple(std::vector<Element> parts);
    static Element pair(Element first, Element second);
    static Element tag(std::string label, Element inner);
    static Element list(std::vector<Element> items);

    Kind kind() const;
    bool is_atom() const { return kind() == Kind::Atom; }
    bool is_tuple() const { return kind() == Kind::Tuple; }
    bool is_tag() const { return kind() == Kind::Tag; }
    bool is_list() const { return kind() == Kind::List; }

    // Atom name or Tag label.
    const std::string& label() const;
    // Children of a Tuple or List; a Tag has exactly one child.
    const std::vector<Element>& parts() const;
    const Element& at(std::size_t i) const;
    std::size_t size() const;

    int compare(const Element& other) const;
    bool operator==(const Element& other) const { return compare(other) == 0; }
    bool operator!=(const Element& other) const { return compare(other) != 0; }
    bool operator<(const Element& other) const { return compare(other) < 0; }

    std::string show() const;
    // Inverse of show(); returns nullopt on malformed input.
    static std::optional<Element> parse(std::string_view text);

private:
    struct Data;
    explicit Element(std::shared_ptr<const Data> data);
    std::shared_ptr<const Data> data_;
};

}  // namespace tcat
