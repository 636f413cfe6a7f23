"""
pyparsing grammars: dict-like and list-like option strings and the lines of
qstate files.
"""
from pyparsing import (Word, Group, Suppress, Combine, Optional, OneOrMore,
                       Forward, Empty, Literal, quotedString, oneOf,
                       removeQuotes, delimitedList, nums, alphas, alphanums,
                       Keyword, CaselessLiteral, ParseException)

(lparen, rparen, lbrack, rbrack,
 lbrace, rbrace, colon, equal_sign, comma) = map(Suppress, '()[]{}:=,')

word = Word(alphas, alphas + alphanums + '_-')

integer = Combine(Optional(oneOf('+ -')) + Word(nums)).setName('integer')
integer.setParseAction(lambda toks: int(toks[0]))

boolean_true = Keyword('True', caseless=True)
boolean_true.setParseAction(lambda x: True)
boolean_false = Keyword('False', caseless=True)
boolean_false.setParseAction(lambda x: False)

boolean = boolean_true | boolean_false

none = Keyword('None', caseless=True)
none.setParseAction(lambda toks: [None])

e = CaselessLiteral('e')
real = (Combine(Optional(oneOf('+ -')) + Word(nums) +
                '.' + Optional(Word(nums)) +
                Optional(e + Optional(oneOf('+ -')) + Word(nums)))
        | Combine(Optional(oneOf('+ -')) + Word(nums) +
                  e + Optional(oneOf('+ -')) + Word(nums))
        ).setName('real')
real.setParseAction(lambda toks: float(toks[0]))

# Any decimal number, converted to float.
decimal = (real | integer).setName('decimal')
decimal.addParseAction(lambda toks: float(toks[0]))

def list_of(element, *elements):
    """
    Return lexical element that parses a list of items. The items can be a one
    or several lexical elements. For example, result of ``list_of(real,
    integer)`` parses list of real or integer numbers.
    """
    for el in elements:
        element ^= el
    lst = delimitedList(element)
    return lst + Optional(comma)

def get_standard_type_defs(word=word):
    """
    Return dict of the pyparsing base lexical elements.

    The compound types (tuple, list, dict) can contain compound types or simple
    types such as integers, floats and words.

    Returns
    -------
    defs : dict
        The dictionary with the following items:

        - tuple: (..., ..., ...)
        - list: [..., ...., ...]
        - dict: {...:..., ...:..., ....} or {...=..., ...=..., ....}
        - list_item: any of preceding compound types or simple types
    """
    tuple_str = Forward()
    list_str = Forward()
    dict_str = Forward()

    list_item = (none ^ boolean ^ real ^ integer ^
                 list_str ^ tuple_str ^ dict_str ^
                 quotedString.copy().setParseAction(removeQuotes) ^
                 word)

    tuple_str.inner = Empty() ^ list_of(list_item)
    list_str.inner = tuple_str.inner.copy()
    tuple_str.inner.setParseAction(lambda toks: [tuple(toks.asList())])
    tuple_str << (lparen + tuple_str.inner + rparen)

    list_str.inner.setParseAction(lambda toks: [toks.asList()])
    list_str << (lbrack + list_str.inner + rbrack)

    dict_entry = Group(list_item + (colon | equal_sign) + list_item)
    dict_str.inner = Empty() ^ list_of(dict_entry)
    dict_str.inner.setParseAction(lambda toks: [dict(toks.asList())])
    dict_str << (lbrace + (dict_str.inner |
                           Empty().setParseAction(lambda x: [{}])) + rbrace)

    defs = {'tuple' : tuple_str,
            'list' : list_str,
            'dict' : dict_str,
            'list_item' : list_item}

    return defs

def parse_as_list(string):
    """
    Parse `string` (for example '2,2,2') and return a list.
    """
    if string is None:
        return []

    if isinstance(string, (list, tuple)):
        return list(string)

    parser = list_of(get_standard_type_defs()['list_item']) | Empty()
    return list(parser.parseString(string, parseAll=True))

def parse_as_dict(string):
    """
    Parse `string` (for example 'p=0.25' or 'p=[0.5,0.5],d=2') and return a
    dictionary.
    """
    if string is None:
        return {}

    if isinstance(string, dict):
        return string

    empty = Empty().setParseAction(lambda toks: [{}])
    parser = get_standard_type_defs()['dict'].inner | empty

    out = {}
    for r in parser.parseString(string, parseAll=True):
        out.update(r)

    return out

# qstate file lines.
qstate_header = Keyword('qstate') + Literal('v1')
qstate_dims = Suppress(Keyword('dims') + Literal(':')) + OneOrMore(integer)
qstate_entry = decimal + comma + decimal
qstate_entry.setParseAction(lambda toks: complex(toks[0], toks[1]))
qstate_row = OneOrMore(qstate_entry)

def parse_line(element, line):
    """
    Parse a whole qstate file `line` with `element`.

    Returns
    -------
    toks : list
        The parsed tokens.
    col : int or None
        None on success, otherwise the 1-based column of the parsing failure.
    msg : str or None
        The failure message.
    """
    try:
        toks = element.parseString(line, parseAll=True).asList()

    except ParseException as exc:
        return None, exc.col, exc.msg

    return toks, None, None
