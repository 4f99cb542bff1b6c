#ifndef DEFPOW_VERDICT_HPP
#define DEFPOW_VERDICT_HPP

#include <string>
#include <utility>

namespace defpow {

// Three-valued truth. Bounded searches never report False without an
// exactness guarantee; Unknown always carries a budget note.
enum class TV { True, False, Unknown };

inline const char* to_cstring(TV v) {
    switch (v) {
        case TV::True: return "True";
        case TV::False: return "False";
        default: return "Unknown";
    }
}

struct Verdict {
    TV tv = TV::Unknown;
    std::string evidence;     // witness / refuter / decision-procedure tag for True and False
    std::string budget_note;  // set only when tv == Unknown

    bool is_true() const { return tv == TV::True; }
    bool is_false() const { return tv == TV::False; }
    bool is_unknown() const { return tv == TV::Unknown; }
};

inline Verdict verdict_true(std::string evidence) { return {TV::True, std::move(evidence), {}}; }
inline Verdict verdict_false(std::string evidence) { return {TV::False, std::move(evidence), {}}; }
inline Verdict verdict_unknown(std::string note) { return {TV::Unknown, {}, std::move(note)}; }

// Kleene connectives.
inline Verdict kleene_not(Verdict v) {
    if (v.tv == TV::True) v.tv = TV::False;
    else if (v.tv == TV::False) v.tv = TV::True;
    return v;
}

inline Verdict kleene_and(const Verdict& a, const Verdict& b) {
    if (a.is_false()) return a;
    if (b.is_false()) return b;
    if (a.is_unknown()) return a;
    if (b.is_unknown()) return b;
    Verdict r = verdict_true(a.evidence);
    if (!b.evidence.empty()) {
        if (!r.evidence.empty()) r.evidence += "; ";
        r.evidence += b.evidence;
    }
    return r;
}

inline Verdict kleene_or(const Verdict& a, const Verdict& b) {
    if (a.is_true()) return a;
    if (b.is_true()) return b;
    if (a.is_unknown()) return a;
    if (b.is_unknown()) return b;
    Verdict r = verdict_false(a.evidence);
    if (!b.evidence.empty()) {
        if (!r.evidence.empty()) r.evidence += "; ";
        r.evidence += b.evidence;
    }
    return r;
}

inline Verdict kleene_implies(const Verdict& a, const Verdict& b) { return kleene_or(kleene_not(a), b); }

}  // namespace defpow

#endif
