#!/usr/bin/env python3
"""Tour of the word algebra: complements, reversals, palindromes, and the
Fibonacci/Pell number and word families."""

from hitomezashi import (BinaryWord, fib_turtle_word, fibonacci, pell,
                         pell_word)

u = BinaryWord("01100")
print("a binary word:", u)
print("  complement :", u.complement())
print("  reversal   :", u.reverse())
print("  palindrome?", u.is_palindrome(),
      " antipalindrome?", u.is_antipalindrome())
print()

print("Fibonacci numbers (seeded 1, 1):",
      [fibonacci(n) for n in range(10)])
print("Pell numbers:", [pell(n) for n in range(10)])
print()

print("Pell words are built recursively; odd indices give palindromes,")
print("even indices give antipalindromes:")
for n in range(1, 7):
    w = pell_word(n)
    kind = "palindrome" if w.is_palindrome() else "antipalindrome"
    print(f"  u({n}) = {str(w):<30} length {len(w):>3} = pell({n})  [{kind}]")
print()

print("Turn words drive the snowflake boundary turtle; their lengths")
print("follow the Fibonacci recursion from 0 and 1:")
for n in range(1, 9):
    q = fib_turtle_word(n)
    print(f"  q({n}) = {str(q):<21} length {len(q)}")
