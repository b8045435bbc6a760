//! C ABI over `arrcount`.
//!
//! Every fallible function returns an [`ArrcStatus`] and writes its result
//! through an out pointer. On failure the message is available from
//! [`arrc_last_error`] on the same thread. Strings returned through `char**`
//! are owned by the caller and released with [`arrc_string_free`]; handles are
//! released with their matching `*_free` function. Big integers cross the
//! boundary as decimal strings, rationals as `p` or `p/q`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::sync::Arc;

use arrcount::arrangements::{
    is_generic, lattice_from_arrangement, tutte_eval, HyperplaneArrangement, IntersectionLattice,
};
use arrcount::enumeration::{
    count_0coned, count_dconed, count_generic, incidence_class, naive_dconed_count,
    zeuthen_transfer, CharNumberTable, CurveSpec, Family,
};
use arrcount::incidence::{
    jacobian_rank, pappus_realization, virtual_dimension, IncidenceSpec, Realization,
};
use arrcount::ring::{RingSpec, TruncatedPolynomial};
use arrcount::schubert::{schubert_degree, GrassmannianSpec};
use arrcount::{parse_rational, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Range = 4,
    Internal = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrcFamily {
    Generic3 = 0,
    Generic4 = 1,
    Braid = 2,
    /// Needs the line count `k`.
    Pencil = 3,
}

/// A plane curve by degree and class; a point condition is `{0, 1}`, a line `{1, 0}`.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct ArrcCurve {
    pub degree: u64,
    pub curve_class: u64,
}

/// Characteristic-number table of a family.
pub struct ArrcCharTable(CharNumberTable);

/// Polynomial in a truncated Chow ring, with its ring.
pub struct ArrcPolynomial {
    ring: Arc<RingSpec>,
    poly: TruncatedPolynomial,
}

/// Hyperplane arrangement with its intersection lattice.
pub struct ArrcArrangement {
    arrangement: HyperplaneArrangement,
    lattice: IntersectionLattice,
}

/// Incidence specification, optionally with a realization.
pub struct ArrcIncidence {
    spec: IncidenceSpec,
    realization: Option<Realization>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(ArrcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse(_) => ArrcStatus::Parse,
            Error::OutOfRange(_)
            | Error::PartitionOutsideBox(_)
            | Error::ExponentExceedsCap { .. }
            | Error::DegreeMismatch { .. } => ArrcStatus::Range,
            Error::InexactDivision { .. } => ArrcStatus::Internal,
            _ => ArrcStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard<F>(f: F) -> ArrcStatus
where
    F: FnOnce() -> Result<(), Failure> + UnwindSafe,
{
    match catch_unwind(f) {
        Ok(Ok(())) => {
            set_error("");
            ArrcStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            ArrcStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(ArrcStatus::NullPointer, format!("{what} is null"))
}

unsafe fn out_ref<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null("handle"))
}

unsafe fn input_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(ArrcStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

fn give_string(out: &mut *mut c_char, s: impl ToString) -> Result<(), Failure> {
    let c = CString::new(s.to_string())
        .map_err(|_| Failure(ArrcStatus::Internal, "interior NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

fn give_handle<T>(out: &mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

/// Message of the last failed call on this thread, or `""`. Valid until the
/// next call into this library on the same thread; do not free.
#[no_mangle]
pub extern "C" fn arrc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn arrc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Degree of the moduli space of generic arrangements of `k` hyperplanes in `P^n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn arrc_count_generic(k: u64, n: u64, out: *mut *mut c_char) -> ArrcStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        give_string(out, count_generic(k, n)?)
    })
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn arrc_count_zero_coned(
    k: u64,
    n: u64,
    out: *mut *mut c_char,
) -> ArrcStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        give_string(out, count_0coned(k, n)?)
    })
}

/// d-coned count; with `naive` set, the single-configuration undercount.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn arrc_count_dconed(
    d: u64,
    k: u64,
    n: u64,
    naive: bool,
    out: *mut *mut c_char,
) -> ArrcStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let value = if naive {
            naive_dconed_count(d, k, n)?
        } else {
            count_dconed(d, k, n)?
        };
        give_string(out, value)
    })
}

/// Degree of `prod sigma_{1^i}^{s[i]}` on `G(d, n)`; `s` has `d + 2` entries.
///
/// # Safety
/// `s` must point to `len` readable values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn arrc_schubert_degree(
    d: usize,
    n: usize,
    s: *const usize,
    len: usize,
    out: *mut *mut c_char,
) -> ArrcStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        if s.is_null() && len > 0 {
            return Err(null("s"));
        }
        let s = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(s, len)
        };
        let g = GrassmannianSpec::new(d, n)?;
        give_string(out, schubert_degree(g, s)?)
    })
}

/// Builds the characteristic-number table of `family` (`k` is read for pencils only).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn arrc_char_table_new(
    family: ArrcFamily,
    k: usize,
    out: *mut *mut ArrcCharTable,
) -> ArrcStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let family = match family {
            ArrcFamily::Generic3 => Family::GenericLines(3),
            ArrcFamily::Generic4 => Family::GenericLines(4),
            ArrcFamily::Braid => Family::Braid,
            ArrcFamily::Pencil => Family::Pencil(k),
        };
        give_handle(out, ArrcCharTable(CharNumberTable::for_family(family)?));
        Ok(())
    })
}

/// Dimension `D` of the family; entries exist for `p = 0..=D`.
///
/// # Safety
/// `table` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn arrc_char_table_dim(
    table: *const ArrcCharTable,
    out: *mut usize,
) -> ArrcStatus {
    guard(|| {
        let table = handle(table)?;
        *out_ref(out, "out")? = table.0.dim();
        Ok(())
    })
}

/// `N(p, D - p)`.
///
/// # Safety
/// `table` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn arrc_char_table_entry(
    table: *const ArrcCharTable,
    p: usize,
    out: *mut *mut c_char,
) -> ArrcStatus {
    guard(|| {
        let table = handle(table)?;
        let out = out_ref(out, "out")?;
        give_string(out, table.0.entry(p)?)
    })
}

/// Count through `p` points and tangent to the `len` given curves
/// (`p + len` must equal the table dimension).
///
/// # Safety
/// `table` and `out` must be valid; `curves` must point to `len` values.
#[no_mangle]
pub unsafe extern "C" fn arrc_zeuthen(
    table: *const ArrcCharTable,
    p: usize,
    curves: *const ArrcCurve,
    len: usize,
    out: *mut *mut c_char,
) -> ArrcStatus {
    guard(|| {
        let table = handle(table)?;
        let out = out_ref(out, "out")?;
        if curves.is_null() && len > 0 {
            return Err(null("curves"));
        }
        let raw = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(curves, len)
        };
        let curves = raw
            .iter()
            .map(|c| CurveSpec::new(c.degree, c.curve_class))
            .collect::<Result<Vec<_>, _>>()?;
        give_string(out, zeuthen_transfer(&table.0, p, &curves)?)
    })
}

/// # Safety
/// `table` must be null or a handle from [`arrc_char_table_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn arrc_char_table_free(table: *mut ArrcCharTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Class of the `k`-line incidence variety (`k` = 3 or 4).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn arrc_incidence_class_new(
    k: usize,
    out: *mut *mut ArrcPolynomial,
) -> ArrcStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let (ring, poly) = incidence_class(k)?;
        give_handle(out, ArrcPolynomial { ring, poly });
        Ok(())
    })
}

/// Coefficient of a monomial written like `x1^2*y12`.
///
/// # Safety
/// `poly` and `out` must be valid; `monomial` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn arrc_polynomial_coefficient(
    poly: *const ArrcPolynomial,
    monomial: *const c_char,
    out: *mut *mut c_char,
) -> ArrcStatus {
    guard(|| {
        let poly = handle(poly)?;
        let text = input_str(monomial, "monomial")?;
        let out = out_ref(out, "out")?;
        let m = poly.ring.parse_monomial(text)?;
        give_string(out, poly.poly.coefficient_of(&m)?)
    })
}

/// Coefficient of the top monomial.
///
/// # Safety
/// `poly` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn arrc_polynomial_chow_degree(
    poly: *const ArrcPolynomial,
    out: *mut *mut c_char,
) -> ArrcStatus {
    guard(|| {
        let poly = handle(poly)?;
        let out = out_ref(out, "out")?;
        give_string(out, poly.poly.chow_degree())
    })
}

/// # Safety
/// `poly` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn arrc_polynomial_to_string(
    poly: *const ArrcPolynomial,
    out: *mut *mut c_char,
) -> ArrcStatus {
    guard(|| {
        let poly = handle(poly)?;
        let out = out_ref(out, "out")?;
        give_string(out, &poly.poly)
    })
}

/// # Safety
/// `poly` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn arrc_polynomial_free(poly: *mut ArrcPolynomial) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Parses an arrangement file and builds its intersection lattice.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn arrc_arrangement_parse(
    text: *const c_char,
    out: *mut *mut ArrcArrangement,
) -> ArrcStatus {
    guard(|| {
        let text = input_str(text, "text")?;
        let out = out_ref(out, "out")?;
        let arrangement = HyperplaneArrangement::parse(text)?;
        let lattice = lattice_from_arrangement(&arrangement)?;
        give_handle(
            out,
            ArrcArrangement {
                arrangement,
                lattice,
            },
        );
        Ok(())
    })
}

/// # Safety
/// `a` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn arrc_arrangement_is_generic(
    a: *const ArrcArrangement,
    out: *mut bool,
) -> ArrcStatus {
    guard(|| {
        let a = handle(a)?;
        *out_ref(out, "out")? = is_generic(&a.arrangement);
        Ok(())
    })
}

/// Multivariate Tutte evaluation; `q` and each of the `len` entries of `xs`
/// are rationals written `p` or `p/q`.
///
/// # Safety
/// `a` and `out` must be valid; `q` and the `len` entries of `xs` must be
/// NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn arrc_arrangement_tutte(
    a: *const ArrcArrangement,
    q: *const c_char,
    xs: *const *const c_char,
    len: usize,
    out: *mut *mut c_char,
) -> ArrcStatus {
    guard(|| {
        let a = handle(a)?;
        let out = out_ref(out, "out")?;
        let rational = |p: *const c_char, what: &str| {
            let text = input_str(p, what)?;
            parse_rational(text).map_err(|m| Failure(ArrcStatus::Parse, m))
        };
        let q = rational(q, "q")?;
        if xs.is_null() && len > 0 {
            return Err(null("xs"));
        }
        let raw = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(xs, len)
        };
        let xs = raw
            .iter()
            .map(|&p| rational(p, "xs entry"))
            .collect::<Result<Vec<_>, _>>()?;
        give_string(out, tutte_eval(&a.lattice, &q, &xs)?)
    })
}

/// # Safety
/// `a` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn arrc_arrangement_free(a: *mut ArrcArrangement) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Parses an incidence spec and, when `realization` is not null, a realization.
///
/// # Safety
/// `spec` (and `realization` if not null) must be NUL-terminated strings; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn arrc_incidence_parse(
    spec: *const c_char,
    realization: *const c_char,
    out: *mut *mut ArrcIncidence,
) -> ArrcStatus {
    guard(|| {
        let spec = IncidenceSpec::parse(input_str(spec, "spec")?)?;
        let realization = if realization.is_null() {
            None
        } else {
            Some(Realization::parse(input_str(realization, "realization")?)?)
        };
        give_handle(out_ref(out, "out")?, ArrcIncidence { spec, realization });
        Ok(())
    })
}

/// The built-in Pappus configuration with its realization.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn arrc_incidence_pappus(out: *mut *mut ArrcIncidence) -> ArrcStatus {
    guard(|| {
        let (spec, r) = pappus_realization();
        give_handle(
            out_ref(out, "out")?,
            ArrcIncidence {
                spec,
                realization: Some(r),
            },
        );
        Ok(())
    })
}

/// # Safety
/// `inc` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn arrc_incidence_virtual_dimension(
    inc: *const ArrcIncidence,
    out: *mut i64,
) -> ArrcStatus {
    guard(|| {
        let inc = handle(inc)?;
        *out_ref(out, "out")? = virtual_dimension(&inc.spec);
        Ok(())
    })
}

/// Rank of the incidence Jacobian; fails with `InvalidArgument` without a realization.
///
/// # Safety
/// `inc` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn arrc_incidence_jacobian_rank(
    inc: *const ArrcIncidence,
    out: *mut usize,
) -> ArrcStatus {
    guard(|| {
        let inc = handle(inc)?;
        let out = out_ref(out, "out")?;
        let r = inc.realization.as_ref().ok_or_else(|| {
            Failure(
                ArrcStatus::InvalidArgument,
                "no realization attached".into(),
            )
        })?;
        *out = jacobian_rank(&inc.spec, r)?;
        Ok(())
    })
}

/// The spec in its text format.
///
/// # Safety
/// `inc` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn arrc_incidence_spec_to_string(
    inc: *const ArrcIncidence,
    out: *mut *mut c_char,
) -> ArrcStatus {
    guard(|| {
        let inc = handle(inc)?;
        give_string(out_ref(out, "out")?, &inc.spec)
    })
}

/// # Safety
/// `inc` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn arrc_incidence_free(inc: *mut ArrcIncidence) {
    if !inc.is_null() {
        drop(Box::from_raw(inc));
    }
}
