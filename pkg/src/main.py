"""
FTFA Kesişim Aracı - Ana Program
Alt grup tabanı, çoklu kesişim, konfigürasyon gerçekleme ve doğrulama komutları

Çıktı sözleşmesi: stdout'a JSON (veya --text ile okunur metin), loglar stderr'e.
Çıkış kodları: 0 başarı, 1 girdi/dosya hatası, 2 alan hatası.
"""

import argparse
import logging
import sys

from colorama import Fore

from config import print_config
from configurations import (howson_violations, is_howson, is_one_monochromatic,
                            is_zero_monochromatic, obstruction_bound)
from console import print_colored, print_header, print_status, print_subheader, setup_logging
from data_manager import (DataManager, decode_configuration, decode_element,
                          decode_realization, decode_spec, decode_subgroup,
                          dumps, encode_ball, encode_configuration, encode_error,
                          encode_intersection, encode_membership,
                          encode_realization, encode_report, encode_subgroup,
                          load_json, report_summary)
from errors import FtfaError, InputFormatError
from ftfa import FtfaElement
from mintersect import intersect
from oracle import ball
from realizer import FiniteBasis, realize_free, realize_ftfa
from stallings import describe
from verifier import verify
from words import format_word, parse_word

logger = logging.getLogger(__name__)


# ============= KOMUTLAR =============

def cmd_basis(args):
    B = decode_subgroup(load_json(args.subgroup))
    doc = encode_subgroup(B)
    if args.dump_automaton:
        doc['automaton'] = B.graph[0].to_dict()
    if args.text:
        print_header("ALT GRUP TABANI")
        print(f"F_{B.n} x Z^{B.m}, rank {B.rank}, kafes rankı {B.lattice.rank}")
        print(str(B))
        if args.dump_automaton:
            print_subheader("Stallings otomatı")
            print(describe(B.graph[0]))
    return doc


def cmd_intersect(args):
    subgroups = [decode_subgroup(load_json(p)) for p in args.subgroups]
    result = intersect(subgroups)
    doc = encode_intersection(result)
    if args.text:
        print_header("KESİŞİM")
        cert = result.certificate
        print_status(result.fg, "sonlu üretilmiş" if result.fg else "sonlu üretilmiş DEĞİL")
        print(f"r = {cert.r}, rank(Λ) = {cert.preimage_lattice.rank}")
        if result.basis is not None:
            print(str(result.basis))
    return doc


def _parse_vector(text, m):
    if not text:
        return (0,) * m
    try:
        vec = tuple(int(a) for a in text.split(','))
    except ValueError as e:
        raise InputFormatError(f"vektör okunamadı: {text!r}") from e
    if len(vec) != m:
        raise InputFormatError(f"vektör uzunluğu {len(vec)} != {m}", expected=m)
    return vec


def cmd_member(args):
    spec = decode_spec(load_json(args.subgroup))
    if args.element:
        g = decode_element(load_json(args.element), spec.n, spec.m)
    else:
        g = FtfaElement(parse_word(args.word or "", spec.n), _parse_vector(args.vector, spec.m))
    coset = spec.completion(g.word)
    result = spec.member(g)
    doc = encode_membership(result, coset)
    if args.text:
        print_status(result, f"{format_word(g.word)} t^{list(g.vector)}")
    return doc


def cmd_conf_check(args):
    c = decode_configuration(load_json(args.configuration))
    howson = is_howson(c)
    doc = encode_configuration(c)
    doc.update({
        'howson': howson,
        'violations': [[list(a), list(b)] for a, b in howson_violations(c)],
        'zero_monochromatic': [i for i in range(1, c.k + 1) if is_zero_monochromatic(c, i)],
        'one_monochromatic': [i for i in range(1, c.k + 1) if is_one_monochromatic(c, i)],
    })
    if args.text:
        print_header("KONFİGÜRASYON")
        print(str(c))
        print_status(howson, "Howson" if howson else "Howson değil")
        for a, b in howson_violations(c)[:10]:
            print_colored(f"   c({a}) = c({b}) = 0, c(∪) = 1", Fore.RED)
    return doc


def cmd_conf_obstruction(args):
    c = decode_configuration(load_json(args.configuration))
    obs = obstruction_bound(c)
    doc = encode_configuration(c)
    doc.update({
        'bound': obs.bound,
        'witness': [list(s) for s in obs.witness] if obs.witness else None,
    })
    if args.text:
        print(f"{c}: m >= {obs.bound}")
        if obs.witness:
            print(f"tanık aile: {[list(s) for s in obs.witness]}")
    return doc


def cmd_conf_realize(args):
    c = decode_configuration(load_json(args.configuration))
    R = realize_free(c) if args.free else realize_ftfa(c)
    doc = encode_realization(R)
    if args.text:
        print_header("GERÇEKLEME")
        print(f"{c} -> F_{R.n} x Z^{R.m}")
        for i, spec in enumerate(R.subgroups, start=1):
            label = str(spec.basis) if isinstance(spec, FiniteBasis) else f"parametrik, {len(spec.pieces)} parça"
            print(f"H_{i}: {label}")
    return doc


def cmd_conf_verify(args):
    c = decode_configuration(load_json(args.configuration))
    R = decode_realization(load_json(args.realization))
    report = verify(c, R, witness_rank=args.witness_rank, parallel=args.parallel,
                    workers=args.workers)
    doc = encode_report(report)
    if args.save:
        saved = DataManager(args.save).save_report(report)
        logger.info("rapor kaydedildi: %s", ", ".join(str(p) for p in saved.values()))
    if args.text:
        print_header("DOĞRULAMA")
        for line in report_summary(report):
            print(line)
    return doc


def cmd_oracle_ball(args):
    spec = decode_spec(load_json(args.subgroup))
    b = ball(spec, args.len, args.norm)
    doc = encode_ball(b, spec.n)
    if args.text:
        print(f"{len(b)} eleman (|w| <= {args.len}, |v| <= {args.norm})")
        for g in b.elements:
            print(f"   {format_word(g.word)} t^{list(g.vector)}")
    return doc


# ============= ARGÜMANLAR =============

def build_parser():
    parser = argparse.ArgumentParser(prog="ftfa", description="F_n x Z^m alt grup kesişim aracı")
    parser.add_argument('--text', action='store_true', help="JSON yerine okunur metin")
    parser.add_argument('--log-level', default=None, help="DEBUG, INFO, WARNING, ERROR")
    parser.add_argument('--show-config', action='store_true', help="geçerli ayarları stderr'e yaz")
    sub = parser.add_subparsers(dest='verb', required=True)

    p = sub.add_parser('basis', help="üreteçlerden kanonik taban")
    p.add_argument('subgroup')
    p.add_argument('--dump-automaton', action='store_true')
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser('intersect', help="çoklu kesişim kararı ve tabanı")
    p.add_argument('subgroups', nargs='+')
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser('member', help="üyelik testi")
    p.add_argument('subgroup')
    p.add_argument('--word', default=None)
    p.add_argument('--vector', default=None, help="virgülle ayrılmış, ör. 1,-2")
    p.add_argument('--element', default=None, help="eleman JSON dosyası")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser('conf-check', help="Howson ve tek renklilik kontrolü")
    p.add_argument('configuration')
    p.set_defaults(func=cmd_conf_check)

    p = sub.add_parser('conf-obstruction', help="abelyan rank alt sınırı")
    p.add_argument('configuration')
    p.set_defaults(func=cmd_conf_obstruction)

    p = sub.add_parser('conf-realize', help="konfigürasyonu gerçekle")
    p.add_argument('configuration')
    p.add_argument('--free', action='store_true', help="F_2 içinde (yalnız Howson)")
    p.set_defaults(func=cmd_conf_realize)

    p = sub.add_parser('conf-verify', help="gerçeklemeyi konfigürasyona karşı doğrula")
    p.add_argument('configuration')
    p.add_argument('realization')
    p.add_argument('--parallel', action='store_true')
    p.add_argument('--workers', type=int, default=None)
    p.add_argument('--witness-rank', type=int, default=None)
    p.add_argument('--save', default=None, metavar='DIR', help="JSON/CSV/TXT raporu kaydet")
    p.set_defaults(func=cmd_conf_verify)

    p = sub.add_parser('oracle-ball', help="sınırlı top numaralaması")
    p.add_argument('subgroup')
    p.add_argument('--len', type=int, default=4)
    p.add_argument('--norm', type=int, default=1)
    p.set_defaults(func=cmd_oracle_ball)
    return parser


def run(argv=None):
    """
    Tek komut çalıştırır

    Returns:
        int: çıkış kodu (0 / 1 / 2)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 1

    setup_logging(args.log_level.upper() if args.log_level else None)
    if args.show_config:
        print_config()
    try:
        doc = args.func(args)
    except (InputFormatError, OSError) as e:
        code = e.code if isinstance(e, FtfaError) else InputFormatError.code
        logger.error("%s", e)
        print(dumps(encode_error(code, str(e))))
        return 1
    except FtfaError as e:
        logger.error("%s", e)
        print(dumps(encode_error(e.code, str(e))))
        return 2

    if not args.text:
        print(dumps(doc))
    if args.verb == 'conf-verify' and not doc['passed']:
        logger.warning("doğrulama başarısız: %d çelişki", sum(not s['consistent'] for s in doc['subsets']))
    return 0


def main():
    sys.exit(run())


# ============= ANA PROGRAM =============
if __name__ == '__main__':
    main()
