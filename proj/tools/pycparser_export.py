#!/usr/bin/env python3
"""Dump a C file as an astvec AST document using pycparser as the reference parser.

Only the node kind and the child order survive; FileAST is renamed Root.
Children are visited in pycparser's own ``children()`` order.
"""
import json
import sys

from pycparser import parse_file

VOCAB = [
    "ID", "Constant", "BinaryOp", "UnaryOp", "ArrayRef", "Assignment", "StructRef",
    "ExprList", "FuncCall", "Cast", "TernaryOp", "CompoundLiteral", "If", "For",
    "While", "DoWhile", "Break", "Continue", "Case", "Default", "Switch", "Goto",
    "Label", "Return", "Compound", "EmptyStatement", "FuncDef", "Decl", "DeclList",
    "TypeDecl", "FuncDecl", "ArrayDecl", "PtrDecl", "ParamList", "IdentifierType",
    "Typedef", "Typename", "Struct", "Union", "Enum", "Enumerator", "EnumeratorList",
    "InitList", "Root",
]


def kind_of(node):
    name = type(node).__name__
    if name == "FileAST":
        return "Root"
    if name not in VOCAB:
        raise SystemExit(f"unsupported node kind {name}")
    return name


def emit(node, out):
    out.append('{"kind":"')
    out.append(kind_of(node))
    out.append('","children":[')
    for i, (_, child) in enumerate(node.children()):
        if i:
            out.append(",")
        emit(child, out)
    out.append("]}")


def main():
    if len(sys.argv) != 2:
        raise SystemExit("usage: pycparser_export.py FILE.c")
    # cpp strips comments, exactly as pycparser expects its input.
    ast = parse_file(sys.argv[1], use_cpp=True, cpp_path="cpp", cpp_args=["-P", "-undef"])
    out = []
    emit(ast, out)
    sys.stdout.write("".join(out) + "\n")


if __name__ == "__main__":
    main()
