#include "hdts/homotopy/fibrancy.hpp"

namespace hdts
{

std::string to_string( fibrancy_status s )
{
    switch ( s )
    {
    case fibrancy_status::fibrant:
        return "fibrant";
    case fibrancy_status::not_fibrant:
        return "not fibrant";
    case fibrancy_status::unknown:
        return "unknown";
    }
    return "?";
}

fibrancy_verdict fibrancy_certificate( const hdts_ptr& x, model m )
{
    fibrancy_verdict out;
    const bool certified = satisfies_csa1( *x ) && ( m != model::localized || label_injective( *x ) );
    if ( certified )
        out.status = fibrancy_status::fibrant;
    return out;
}

fibrancy_verdict fibrancy_refute( const hdts_ptr& x, model m, int depth, int dim_cap, const budget& b )
{
    const instantiation inst{ x->used_labels(), dim_cap };
    std::optional< family_tag > s;
    auto i = family_tag::i_hdts;
    if ( m == model::cts_plus )
        i = family_tag::i_plus;
    if ( m == model::localized )
        s = family_tag::s_cof;

    fibrancy_verdict out;
    for ( const auto& j : lambda_generate( s, i, depth, inst, b ) )
    {
        const auto v = check_injective( j.map, x, b );
        if ( !v.holds )
        {
            out.status = fibrancy_status::not_fibrant;
            out.witness = j.name;
            out.map = v.witness;
            return out;
        }
    }
    return out;
}

} // namespace hdts
