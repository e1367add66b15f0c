"""Build the square root of F for the trivial and squeezed P inputs and print every certificate."""
from plroots.constructions import build_square_root_of_F, dyn_value, squeezed_P_inputs, support_table, table


def report(label, bundle):
    print(f"### {label}")
    print(f"g^2(f^2(1)) = {dyn_value(bundle)}")
    for name, rows in bundle.certificates.items():
        print(f"-- {name}")
        print(table(rows))
    for word, regions in support_table(bundle).items():
        print(f"-- support of {word}")
        for region, comps in regions.items():
            print(f"   {region}: {[str(c) for c in comps]}")
    print()


def main():
    report("h1 = h2 = id", build_square_root_of_F())
    report("h1, h2 = squeezed P realization", build_square_root_of_F(*squeezed_P_inputs()))


if __name__ == "__main__":
    main()
